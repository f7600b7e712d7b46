/** Test chat pane: drives generateAnswer and threads conversation context.
 *
 * The service answers bare follow-ups ("yes", "benefits") only when it
 * knows the previous turn, so the pane remembers the QA behind the last
 * knowledge base answer and sends it as context with the next question.
 * Chit-chat and no-answer turns do not move the conversation, so they
 * leave the context untouched.
 */

import { Answer, Api, ChatContext } from "./api.js";
import { el } from "./dom.js";

const SCORE_DECIMALS = 3;

export class ChatView {
  readonly root: HTMLElement;
  private log: HTMLElement;
  private input: HTMLInputElement;
  private context: ChatContext | null = null;
  private lastUserQuery = "";
  // one server call per view at a time; extra clicks are dropped, not queued
  private inFlight = false;

  constructor(
    private api: Api,
    private kbId: string,
    private onKbChanged: () => void = () => {},
  ) {
    this.log = el("div", { class: "chat-log" });
    this.input = el("input", {
      class: "chat-input",
      type: "text",
      placeholder: "Ask the knowledge base...",
    });
    const reset = el("button", { type: "button", class: "chat-reset" }, "New conversation");
    reset.addEventListener("click", () => this.reset());
    const form = el("form", { class: "chat-form" }, this.input, el("button", { type: "submit" }, "Send"), reset);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      const text = this.input.value.trim();
      if (text && !this.inFlight) {
        this.input.value = "";
        void this.send(text);
      }
    });
    this.root = el("section", { class: "chat" }, this.log, form);
  }

  /** Drop the threaded context so the next question starts a fresh turn. */
  reset(): void {
    if (this.context !== null) {
      this.log.append(el("div", { class: "chat-divider" }, "new conversation"));
    }
    this.context = null;
  }

  /** Context that will accompany the next question; null means a fresh turn. */
  currentContext(): ChatContext | null {
    return this.context;
  }

  async send(question: string): Promise<void> {
    if (this.inFlight) return;
    this.inFlight = true;
    try {
      this.log.append(el("div", { class: "bubble user" }, question));
      let response;
      try {
        response = await this.api.generateAnswer(this.kbId, question, {
          top: 3,
          context: this.context ?? undefined,
        });
      } catch (err) {
        this.log.append(el("div", { class: "bubble error" }, String(err)));
        return;
      }
      const top = response.answers[0];
      this.log.append(this.renderAnswer(question, top, response.answers.slice(1)));
      if (top.kind === "kb" && top.qaId !== null) {
        this.context = { previousQaId: top.qaId, previousUserQuery: question };
      }
      this.lastUserQuery = question;
      this.log.scrollTop = this.log.scrollHeight;
    } finally {
      this.inFlight = false;
    }
  }

  private renderAnswer(question: string, top: Answer, rest: Answer[]): HTMLElement {
    const bubble = el("div", { class: `bubble bot kind-${top.kind}` });
    bubble.append(el("div", { class: "answer-text" }, top.answer));

    const meta = el("div", { class: "answer-meta" });
    meta.append(el("span", { class: "kind-badge" }, top.kind));
    if (top.kind === "kb" && top.qaId !== null) {
      meta.append(el("span", {}, `QA #${top.qaId}`));
      meta.append(el("span", {}, `score ${top.score.toFixed(SCORE_DECIMALS)}`));
    }
    bubble.append(meta);

    if (top.features) {
      bubble.append(this.renderFeatures(top.features));
    }
    if (top.kind === "kb" && rest.length > 0) {
      bubble.append(this.renderAlternatives(question, top, rest));
    }
    return bubble;
  }

  private renderFeatures(features: Record<string, number>): HTMLElement {
    const table = el("table", { class: "feature-table" });
    for (const [name, value] of Object.entries(features)) {
      table.append(
        el("tr", {}, el("td", {}, name), el("td", {}, value.toFixed(4))),
      );
    }
    const details = el("details", { class: "features" });
    details.append(el("summary", {}, "features"), table);
    return details;
  }

  private renderAlternatives(question: string, top: Answer, rest: Answer[]): HTMLElement {
    const list = el("div", { class: "alternatives" }, el("div", { class: "alt-title" }, "Other candidates"));
    for (const alt of rest) {
      if (alt.qaId === null) continue;
      const row = el(
        "div",
        { class: "alt-row" },
        el("span", {}, `#${alt.qaId} (${alt.score.toFixed(SCORE_DECIMALS)}) ${alt.answer}`),
      );
      const pick = el("button", { type: "button", class: "alt-pick" }, "this one");
      pick.addEventListener("click", () => {
        void this.pickAlternative(question, top.qaId!, alt.qaId!, row);
      });
      row.append(pick);
      list.append(row);
    }
    return list;
  }

  private async pickAlternative(
    question: string,
    shownQaId: number,
    selectedQaId: number,
    row: HTMLElement,
  ): Promise<void> {
    if (this.inFlight) return;
    this.inFlight = true;
    try {
      await this.api.sendFeedback(this.kbId, question, shownQaId, selectedQaId);
      row.append(el("span", { class: "alt-recorded" }, "recorded"));
      this.onKbChanged();
    } finally {
      this.inFlight = false;
    }
  }

  /** The question text of the most recent user turn. */
  lastQuery(): string {
    return this.lastUserQuery;
  }

  transcript(): string[] {
    return [...this.log.querySelectorAll(".bubble")].map((node) =>
      (node as HTMLElement).innerText ?? node.textContent ?? "",
    );
  }
}
