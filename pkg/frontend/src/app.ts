/** Application shell: KB list on the left, the open KB's tabs on the right. */

import { Api, KbSummary } from "./api.js";
import { ChatView } from "./chat.js";
import { clear, el } from "./dom.js";
import { EditorView } from "./editor.js";
import { SuggestionsView } from "./suggestions.js";

const PERSONAS = ["none", "professional", "witty", "friendly", "caring", "enthusiastic"];

type TabName = "editor" | "chat" | "suggestions";

export class App {
  readonly root: HTMLElement;
  private sidebar: HTMLElement;
  private main: HTMLElement;
  private openKbId: string | null = null;
  private activeTab: TabName = "chat";
  editor: EditorView | null = null;
  chat: ChatView | null = null;
  suggestions: SuggestionsView | null = null;

  constructor(private api: Api) {
    this.sidebar = el("aside", { class: "sidebar" });
    this.main = el("main", { class: "main" });
    this.root = el("div", { class: "app" }, this.sidebar, this.main);
  }

  async start(): Promise<void> {
    await this.refreshList();
    if (!this.openKbId) {
      clear(this.main);
      this.main.append(el("p", { class: "empty" }, "Create or pick a knowledge base."));
    }
  }

  async refreshList(): Promise<void> {
    const { kbs } = await this.api.listKbs();
    clear(this.sidebar);
    this.sidebar.append(el("h1", {}, "Knowledge bases"));
    const list = el("ul", { class: "kb-list" });
    for (const kb of kbs) {
      list.append(this.renderListItem(kb));
    }
    this.sidebar.append(list, this.renderCreateForm());
  }

  private renderListItem(kb: KbSummary): HTMLElement {
    const badge =
      kb.pendingSuggestions > 0
        ? el("span", { class: "badge" }, String(kb.pendingSuggestions))
        : null;
    const item = el(
      "li",
      { class: kb.kbId === this.openKbId ? "kb-item active" : "kb-item", "data-kb-id": kb.kbId },
      el("span", { class: "kb-name" }, kb.name),
      el("span", { class: "kb-meta" }, `${kb.qaCount} QAs`),
      badge,
    );
    item.addEventListener("click", () => void this.openKb(kb.kbId));
    return item;
  }

  private renderCreateForm(): HTMLElement {
    const name = el("input", { type: "text", placeholder: "New KB name" });
    const persona = el("select", {});
    for (const option of PERSONAS) {
      persona.append(el("option", { value: option }, option));
    }
    const question = el("input", { type: "text", placeholder: "First question" });
    const answer = el("input", { type: "text", placeholder: "Its answer" });
    const button = el("button", { type: "submit" }, "Create");
    const status = el("div", { class: "form-status" });
    const form = el(
      "form",
      { class: "kb-create" },
      el("h2", {}, "New KB"),
      name,
      persona,
      question,
      answer,
      button,
      status,
    );
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void (async () => {
        try {
          const created = await this.api.createKb({
            name: name.value.trim(),
            persona: persona.value,
            editorialQAs: [{ question: question.value.trim(), answer: answer.value.trim() }],
          });
          await this.refreshList();
          await this.openKb(created.kbId);
        } catch (err) {
          status.textContent = err instanceof Error ? err.message : String(err);
        }
      })();
    });
    return form;
  }

  async openKb(kbId: string): Promise<void> {
    this.openKbId = kbId;
    const refresh = () => {
      // content changed under us (accepted suggestion, feedback, edit):
      // pull fresh copies so revision checks use the latest number
      void this.editor?.load();
      void this.refreshList();
    };
    this.editor = new EditorView(this.api, kbId, refresh);
    this.chat = new ChatView(this.api, kbId, () => void this.suggestions?.load());
    this.suggestions = new SuggestionsView(this.api, kbId, refresh);
    await Promise.all([this.editor.load(), this.suggestions.load()]);
    this.renderTabs();
  }

  private renderTabs(): void {
    clear(this.main);
    const bar = el("nav", { class: "tabs" });
    const panes: Record<TabName, HTMLElement> = {
      editor: this.editor!.root,
      chat: this.chat!.root,
      suggestions: this.suggestions!.root,
    };
    for (const tab of Object.keys(panes) as TabName[]) {
      const button = el(
        "button",
        { type: "button", class: tab === this.activeTab ? "tab active" : "tab", "data-tab": tab },
        tab,
      );
      button.addEventListener("click", () => {
        this.activeTab = tab;
        this.renderTabs();
      });
      bar.append(button);
    }
    this.main.append(bar, panes[this.activeTab]);
  }

  showTab(tab: TabName): void {
    this.activeTab = tab;
    this.renderTabs();
  }
}

export function mount(rootId: string, baseUrl = ""): App {
  const host = document.getElementById(rootId);
  if (!host) {
    throw new Error(`no element #${rootId} to mount into`);
  }
  const app = new App(new Api(baseUrl));
  host.append(app.root);
  void app.start();
  return app;
}
