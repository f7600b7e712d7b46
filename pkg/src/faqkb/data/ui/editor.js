/** KB editor: QA table with inline edits, additions, and deletes.
 *
 * Edits are optimistic: every save sends the revision this view loaded,
 * and a 409 from the service means another editor (or an accepted
 * suggestion) changed the KB first. That shows up as a banner instead of
 * silently overwriting their work.
 */
import { ApiFault } from "./api.js";
import { clear, el } from "./dom.js";
export class EditorView {
    constructor(api, kbId, onSaved = () => { }) {
        this.api = api;
        this.kbId = kbId;
        this.onSaved = onSaved;
        this.detail = null;
        // one save per view at a time; a double click must not send the patch twice
        this.saving = false;
        this.banner = el("div", { class: "banner hidden" });
        this.table = el("div", { class: "qa-table" });
        this.root = el("section", { class: "editor" }, this.banner, this.table);
    }
    async load() {
        this.detail = await this.api.getKb(this.kbId);
        this.hideConflict();
        this.render();
    }
    revision() {
        return this.detail?.revision ?? null;
    }
    render() {
        if (!this.detail)
            return;
        clear(this.table);
        const detail = this.detail;
        this.table.append(el("div", { class: "editor-head" }, el("h2", {}, detail.name), el("span", { class: "pill" }, `persona: ${detail.persona}`), el("span", { class: "pill" }, `revision ${detail.revision}`), el("span", { class: "pill" }, `${detail.qaPairs.length} QAs`)));
        for (const qa of detail.qaPairs) {
            this.table.append(this.renderRow(qa));
        }
        this.table.append(this.renderAddForm());
    }
    renderRow(qa) {
        const row = el("div", { class: "qa-row", "data-qa-id": String(qa.id) });
        const header = el("div", { class: "qa-head" }, el("span", { class: "qa-id" }, `#${qa.id}`), el("span", { class: "qa-question" }, qa.question), qa.parentId !== null ? el("span", { class: "pill" }, `follows #${qa.parentId}`) : null);
        const alts = el("div", { class: "qa-alts" });
        for (const alt of qa.alternateQuestions) {
            alts.append(el("span", { class: "alt-chip" }, alt));
        }
        const answer = el("div", { class: "qa-answer" }, qa.answer);
        const editButton = el("button", { type: "button" }, "Edit");
        const deleteButton = el("button", { type: "button", class: "danger" }, "Delete");
        editButton.addEventListener("click", () => this.openRowEditor(row, qa));
        deleteButton.addEventListener("click", () => {
            void this.save({ delete: [qa.id] });
        });
        row.append(header, alts, answer, el("div", { class: "qa-actions" }, editButton, deleteButton));
        return row;
    }
    openRowEditor(row, qa) {
        clear(row);
        const question = el("input", { type: "text", value: qa.question });
        const answer = el("textarea", {}, qa.answer);
        const alts = el("input", {
            type: "text",
            value: qa.alternateQuestions.join(", "),
            placeholder: "alternate questions, comma separated",
        });
        const parent = el("input", {
            type: "text",
            value: qa.parentId === null ? "" : String(qa.parentId),
            placeholder: "parent QA id",
        });
        const saveButton = el("button", { type: "button" }, "Save");
        const cancelButton = el("button", { type: "button" }, "Cancel");
        saveButton.addEventListener("click", () => {
            const parentRaw = parent.value.trim();
            void this.save({
                edit: [
                    {
                        id: qa.id,
                        question: question.value.trim(),
                        answer: answer.value,
                        alternateQuestions: alts.value
                            .split(",")
                            .map((s) => s.trim())
                            .filter((s) => s.length > 0),
                        parentId: parentRaw === "" ? null : Number(parentRaw),
                    },
                ],
            });
        });
        cancelButton.addEventListener("click", () => this.render());
        row.append(el("label", {}, "Question", question), el("label", {}, "Alternates", alts), el("label", {}, "Answer", answer), el("label", {}, "Follows", parent), el("div", { class: "qa-actions" }, saveButton, cancelButton));
    }
    renderAddForm() {
        const question = el("input", { type: "text", placeholder: "New question" });
        const answer = el("input", { type: "text", placeholder: "Its answer" });
        const addButton = el("button", { type: "button" }, "Add QA");
        addButton.addEventListener("click", () => {
            if (!question.value.trim() || !answer.value.trim())
                return;
            void this.save({
                add: [{ question: question.value.trim(), answer: answer.value.trim() }],
            });
        });
        return el("div", { class: "qa-add" }, question, answer, addButton);
    }
    async save(patch) {
        if (!this.detail || this.saving)
            return;
        this.saving = true;
        try {
            try {
                await this.api.updateKb(this.kbId, patch, this.detail.revision);
            }
            catch (err) {
                if (err instanceof ApiFault && err.code === "revision_conflict") {
                    this.showConflict();
                    return;
                }
                this.showError(err instanceof Error ? err.message : String(err));
                return;
            }
            await this.load();
            this.onSaved();
        }
        finally {
            this.saving = false;
        }
    }
    showConflict() {
        clear(this.banner);
        const reload = el("button", { type: "button" }, "Reload");
        reload.addEventListener("click", () => void this.load());
        this.banner.append(el("span", {}, "Someone else changed this KB since you loaded it. Reload to pick up their version, then redo your edit."), reload);
        this.banner.className = "banner conflict";
    }
    showError(message) {
        clear(this.banner);
        this.banner.append(el("span", {}, message));
        this.banner.className = "banner error";
    }
    hideConflict() {
        clear(this.banner);
        this.banner.className = "banner hidden";
    }
}
