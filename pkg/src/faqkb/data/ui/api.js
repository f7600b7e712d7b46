/** Typed client for the knowledge base REST service.
 *
 * Every mutation that races other editors carries the revision the caller
 * last saw; the service answers 409 revision_conflict when someone else
 * got there first, and that surfaces here as ApiFault.
 */
export class ApiFault extends Error {
    constructor(status, code, message, details = []) {
        super(message);
        this.status = status;
        this.code = code;
        this.details = details;
    }
}
async function parseError(response) {
    let body = {};
    try {
        body = await response.json();
    }
    catch {
        // non-JSON error body; fall through to generic fault
    }
    return new ApiFault(response.status, body.code ?? "http_error", body.message ?? `HTTP ${response.status}`, body.details ?? []);
}
export class Api {
    constructor(baseUrl = "") {
        this.baseUrl = baseUrl;
    }
    async request(method, path, body, headers = {}) {
        const options = { method, headers: { ...headers } };
        if (body !== undefined) {
            options.headers["Content-Type"] = "application/json";
            options.body = JSON.stringify(body);
        }
        const response = await fetch(this.baseUrl + path, options);
        if (!response.ok) {
            throw await parseError(response);
        }
        if (response.status === 204) {
            return undefined;
        }
        return (await response.json());
    }
    listKbs() {
        return this.request("GET", "/kbs");
    }
    createKb(body) {
        return this.request("POST", "/kbs", body);
    }
    getKb(kbId) {
        return this.request("GET", `/kbs/${kbId}`);
    }
    updateKb(kbId, patch, expectedRevision) {
        const headers = {};
        if (expectedRevision !== undefined) {
            headers["X-Expected-Revision"] = String(expectedRevision);
        }
        return this.request("PATCH", `/kbs/${kbId}`, patch, headers);
    }
    deleteKb(kbId) {
        return this.request("DELETE", `/kbs/${kbId}`);
    }
    generateAnswer(kbId, question, options = {}) {
        const body = { question };
        if (options.top !== undefined)
            body.top = options.top;
        if (options.context !== undefined)
            body.context = options.context;
        if (options.scoreThreshold !== undefined)
            body.scoreThreshold = options.scoreThreshold;
        return this.request("POST", `/kbs/${kbId}/generateAnswer`, body);
    }
    sendFeedback(kbId, queryText, shownQaId, selectedQaId) {
        return this.request("POST", `/kbs/${kbId}/feedback`, {
            queryText,
            shownQaId,
            selectedQaId,
        });
    }
    listSuggestions(kbId, status = "pending") {
        return this.request("GET", `/kbs/${kbId}/suggestions?status=${status}`);
    }
    resolveSuggestion(kbId, suggestionId, decision, wholeCluster = false) {
        return this.request("POST", `/kbs/${kbId}/suggestions/${suggestionId}:resolve`, {
            decision,
            wholeCluster,
        });
    }
}
