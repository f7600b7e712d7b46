/** Suggestion review queue, grouped by cluster.
 *
 * Near-duplicate suggestions arrive pre-clustered; the representative
 * leads each group. Accepting grafts the query onto its target QA as an
 * alternate question, rejecting just closes it. A whole cluster can be
 * resolved through its representative in one click.
 */

import { Api, Suggestion } from "./api.js";
import { clear, el } from "./dom.js";

export class SuggestionsView {
  readonly root: HTMLElement;
  private list: HTMLElement;
  // one resolve per view at a time; a double click must not resolve twice
  private resolving = false;

  constructor(
    private api: Api,
    private kbId: string,
    private onResolved: () => void = () => {},
  ) {
    this.list = el("div", { class: "suggestion-list" });
    this.root = el("section", { class: "suggestions" }, this.list);
  }

  async load(): Promise<void> {
    const { suggestions } = await this.api.listSuggestions(this.kbId, "pending");
    this.render(suggestions);
  }

  private render(suggestions: Suggestion[]): void {
    clear(this.list);
    if (suggestions.length === 0) {
      this.list.append(el("p", { class: "empty" }, "No pending suggestions."));
      return;
    }
    const clusters = new Map<number, Suggestion[]>();
    for (const suggestion of suggestions) {
      const group = clusters.get(suggestion.clusterId) ?? [];
      group.push(suggestion);
      clusters.set(suggestion.clusterId, group);
    }
    for (const [clusterId, group] of clusters) {
      group.sort((a, b) => Number(b.representative) - Number(a.representative));
      this.list.append(this.renderCluster(clusterId, group));
    }
  }

  private renderCluster(clusterId: number, group: Suggestion[]): HTMLElement {
    const box = el("div", { class: "cluster", "data-cluster-id": String(clusterId) });
    if (group.length > 1) {
      box.append(el("div", { class: "cluster-head" }, `${group.length} similar suggestions`));
    }
    for (const suggestion of group) {
      box.append(this.renderSuggestion(suggestion, group.length > 1));
    }
    return box;
  }

  private renderSuggestion(suggestion: Suggestion, inCluster: boolean): HTMLElement {
    const row = el(
      "div",
      {
        class: suggestion.representative ? "suggestion representative" : "suggestion",
        "data-suggestion-id": String(suggestion.suggestionId),
      },
      el("div", { class: "suggestion-query" }, `"${suggestion.queryText}"`),
      el(
        "div",
        { class: "suggestion-target" },
        `add as alternate of QA #${suggestion.targetQaId} (${suggestion.origin})`,
      ),
    );
    const actions = el("div", { class: "suggestion-actions" });
    const accept = el("button", { type: "button" }, "Accept");
    const reject = el("button", { type: "button", class: "danger" }, "Reject");
    accept.addEventListener("click", () => void this.resolve(suggestion, "accept", false));
    reject.addEventListener("click", () => void this.resolve(suggestion, "reject", false));
    actions.append(accept, reject);
    if (inCluster && suggestion.representative) {
      const acceptAll = el("button", { type: "button" }, "Accept cluster");
      const rejectAll = el("button", { type: "button", class: "danger" }, "Reject cluster");
      acceptAll.addEventListener("click", () => void this.resolve(suggestion, "accept", true));
      rejectAll.addEventListener("click", () => void this.resolve(suggestion, "reject", true));
      actions.append(acceptAll, rejectAll);
    }
    row.append(actions);
    return row;
  }

  async resolve(
    suggestion: Suggestion,
    decision: "accept" | "reject",
    wholeCluster: boolean,
  ): Promise<void> {
    if (this.resolving) return;
    this.resolving = true;
    try {
      await this.api.resolveSuggestion(this.kbId, suggestion.suggestionId, decision, wholeCluster);
      await this.load();
      this.onResolved();
    } finally {
      this.resolving = false;
    }
  }
}
