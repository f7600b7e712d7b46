/** Suggestion review queue, grouped by cluster.
 *
 * Near-duplicate suggestions arrive pre-clustered; the representative
 * leads each group. Accepting grafts the query onto its target QA as an
 * alternate question, rejecting just closes it. A whole cluster can be
 * resolved through its representative in one click.
 */
import { clear, el } from "./dom.js";
export class SuggestionsView {
    constructor(api, kbId, onResolved = () => { }) {
        this.api = api;
        this.kbId = kbId;
        this.onResolved = onResolved;
        // one resolve per view at a time; a double click must not resolve twice
        this.resolving = false;
        this.list = el("div", { class: "suggestion-list" });
        this.root = el("section", { class: "suggestions" }, this.list);
    }
    async load() {
        const { suggestions } = await this.api.listSuggestions(this.kbId, "pending");
        this.render(suggestions);
    }
    render(suggestions) {
        clear(this.list);
        if (suggestions.length === 0) {
            this.list.append(el("p", { class: "empty" }, "No pending suggestions."));
            return;
        }
        const clusters = new Map();
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
    renderCluster(clusterId, group) {
        const box = el("div", { class: "cluster", "data-cluster-id": String(clusterId) });
        if (group.length > 1) {
            box.append(el("div", { class: "cluster-head" }, `${group.length} similar suggestions`));
        }
        for (const suggestion of group) {
            box.append(this.renderSuggestion(suggestion, group.length > 1));
        }
        return box;
    }
    renderSuggestion(suggestion, inCluster) {
        const row = el("div", {
            class: suggestion.representative ? "suggestion representative" : "suggestion",
            "data-suggestion-id": String(suggestion.suggestionId),
        }, el("div", { class: "suggestion-query" }, `"${suggestion.queryText}"`), el("div", { class: "suggestion-target" }, `add as alternate of QA #${suggestion.targetQaId} (${suggestion.origin})`));
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
    async resolve(suggestion, decision, wholeCluster) {
        if (this.resolving)
            return;
        this.resolving = true;
        try {
            await this.api.resolveSuggestion(this.kbId, suggestion.suggestionId, decision, wholeCluster);
            await this.load();
            this.onResolved();
        }
        finally {
            this.resolving = false;
        }
    }
}
