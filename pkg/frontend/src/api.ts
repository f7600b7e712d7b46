/** Typed client for the knowledge base REST service.
 *
 * Every mutation that races other editors carries the revision the caller
 * last saw; the service answers 409 revision_conflict when someone else
 * got there first, and that surfaces here as ApiFault.
 */

export interface QaPair {
  id: number;
  question: string;
  alternateQuestions: string[];
  answer: string;
  parentId: number | null;
  source: string | null;
  metadata: Record<string, string>;
}

export interface KbSummary {
  kbId: string;
  name: string;
  persona: string;
  qaCount: number;
  revision: number;
  pendingSuggestions: number;
}

export interface KbDetail {
  kbId: string;
  name: string;
  persona: string;
  revision: number;
  synonyms: Record<string, string[]>;
  qaPairs: QaPair[];
}

export interface Answer {
  qaId: number | null;
  answer: string;
  score: number;
  retrievalScore: number;
  kind: "kb" | "chitchat" | "noanswer";
  features: Record<string, number> | null;
}

export interface AnswerResponse {
  answers: Answer[];
  activeLearningEnabled: boolean;
}

export interface Suggestion {
  suggestionId: number;
  queryText: string;
  targetQaId: number;
  origin: string;
  createdAt: number;
  clusterId: number;
  status: string;
  representative: boolean;
}

export interface QaDraft {
  question: string;
  answer: string;
  alternateQuestions?: string[];
  parentId?: number | null;
}

export interface KbPatch {
  name?: string;
  persona?: string;
  synonyms?: Record<string, string[]>;
  add?: QaDraft[];
  edit?: (QaDraft & { id: number })[];
  delete?: number[];
}

export interface ChatContext {
  previousQaId: number;
  previousUserQuery?: string;
}

export class ApiFault extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public details: string[] = [],
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<ApiFault> {
  let body: { code?: string; message?: string; details?: string[] } = {};
  try {
    body = await response.json();
  } catch {
    // non-JSON error body; fall through to generic fault
  }
  return new ApiFault(
    response.status,
    body.code ?? "http_error",
    body.message ?? `HTTP ${response.status}`,
    body.details ?? [],
  );
}

export class Api {
  constructor(private baseUrl: string = "") {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    headers: Record<string, string> = {},
  ): Promise<T> {
    const options: RequestInit = { method, headers: { ...headers } };
    if (body !== undefined) {
      (options.headers as Record<string, string>)["Content-Type"] = "application/json";
      options.body = JSON.stringify(body);
    }
    const response = await fetch(this.baseUrl + path, options);
    if (!response.ok) {
      throw await parseError(response);
    }
    if (response.status === 204) {
      return undefined as T;
    }
    return (await response.json()) as T;
  }

  listKbs(): Promise<{ kbs: KbSummary[] }> {
    return this.request("GET", "/kbs");
  }

  createKb(body: {
    name: string;
    persona?: string;
    editorialQAs?: QaDraft[];
    sourceFiles?: string[];
  }): Promise<{ kbId: string; revision: number; qaCount: number; warnings: string[] }> {
    return this.request("POST", "/kbs", body);
  }

  getKb(kbId: string): Promise<KbDetail> {
    return this.request("GET", `/kbs/${kbId}`);
  }

  updateKb(
    kbId: string,
    patch: KbPatch,
    expectedRevision?: number,
  ): Promise<{ kbId: string; revision: number }> {
    const headers: Record<string, string> = {};
    if (expectedRevision !== undefined) {
      headers["X-Expected-Revision"] = String(expectedRevision);
    }
    return this.request("PATCH", `/kbs/${kbId}`, patch, headers);
  }

  deleteKb(kbId: string): Promise<void> {
    return this.request("DELETE", `/kbs/${kbId}`);
  }

  generateAnswer(
    kbId: string,
    question: string,
    options: { top?: number; context?: ChatContext; scoreThreshold?: number } = {},
  ): Promise<AnswerResponse> {
    const body: Record<string, unknown> = { question };
    if (options.top !== undefined) body.top = options.top;
    if (options.context !== undefined) body.context = options.context;
    if (options.scoreThreshold !== undefined) body.scoreThreshold = options.scoreThreshold;
    return this.request("POST", `/kbs/${kbId}/generateAnswer`, body);
  }

  sendFeedback(
    kbId: string,
    queryText: string,
    shownQaId: number,
    selectedQaId: number,
  ): Promise<{ accepted: boolean; suggestionId: number | null }> {
    return this.request("POST", `/kbs/${kbId}/feedback`, {
      queryText,
      shownQaId,
      selectedQaId,
    });
  }

  listSuggestions(
    kbId: string,
    status: "pending" | "all" = "pending",
  ): Promise<{ suggestions: Suggestion[] }> {
    return this.request("GET", `/kbs/${kbId}/suggestions?status=${status}`);
  }

  resolveSuggestion(
    kbId: string,
    suggestionId: number,
    decision: "accept" | "reject",
    wholeCluster = false,
  ): Promise<{ resolved: number[]; decision: string; revision: number }> {
    return this.request("POST", `/kbs/${kbId}/suggestions/${suggestionId}:resolve`, {
      decision,
      wholeCluster,
    });
  }
}
