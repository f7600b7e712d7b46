// @vitest-environment jsdom
import { afterEach, describe, expect, it, vi } from "vitest";

import { Api } from "../src/api.js";
import { ChatView } from "../src/chat.js";
import { EditorView } from "../src/editor.js";
import { SuggestionsView } from "../src/suggestions.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

function kbAnswer(qaId: number, answer: string, score = 0.9) {
  return {
    qaId,
    answer,
    score,
    retrievalScore: 2.0,
    kind: "kb",
    features: { semQ: 0.5, wnQ: 0.25 },
  };
}

afterEach(() => {
  vi.unstubAllGlobals();
  document.body.innerHTML = "";
});

describe("ChatView context threading", () => {
  it("threads the previous KB answer into the next question", async () => {
    const fetchMock = vi
      .fn()
      .mockResolvedValueOnce(
        jsonResponse({ answers: [kbAnswer(3, "Want to know more?")], activeLearningEnabled: true }),
      )
      .mockResolvedValueOnce(
        jsonResponse({ answers: [kbAnswer(4, "Here is more.")], activeLearningEnabled: true }),
      );
    vi.stubGlobal("fetch", fetchMock);

    const chat = new ChatView(new Api(), "k1");
    document.body.append(chat.root);

    await chat.send("know about xyz");
    expect(chat.currentContext()).toEqual({
      previousQaId: 3,
      previousUserQuery: "know about xyz",
    });

    await chat.send("yes");
    const secondBody = JSON.parse(fetchMock.mock.calls[1][1].body);
    expect(secondBody.context).toEqual({
      previousQaId: 3,
      previousUserQuery: "know about xyz",
    });
    // the follow-up answer becomes the context for turn three
    expect(chat.currentContext()!.previousQaId).toBe(4);
  });

  it("does not thread context from chit-chat or no-answer turns", async () => {
    const fetchMock = vi
      .fn()
      .mockResolvedValueOnce(
        jsonResponse({
          answers: [
            { qaId: null, answer: "Hi there!", score: 1.0, retrievalScore: 0, kind: "chitchat", features: null },
          ],
          activeLearningEnabled: true,
        }),
      )
      .mockResolvedValueOnce(
        jsonResponse({ answers: [kbAnswer(2, "We open at nine.")], activeLearningEnabled: true }),
      );
    vi.stubGlobal("fetch", fetchMock);

    const chat = new ChatView(new Api(), "k1");
    document.body.append(chat.root);

    await chat.send("hi");
    expect(chat.currentContext()).toBeNull();

    await chat.send("when do you open");
    const secondBody = JSON.parse(fetchMock.mock.calls[1][1].body);
    expect(secondBody.context).toBeUndefined();
  });

  it("starts a fresh turn after a conversation reset", async () => {
    const fetchMock = vi
      .fn()
      .mockResolvedValue(
        jsonResponse({ answers: [kbAnswer(3, "Want to know more?")], activeLearningEnabled: true }),
      );
    vi.stubGlobal("fetch", fetchMock);

    const chat = new ChatView(new Api(), "k1");
    document.body.append(chat.root);
    await chat.send("know about xyz");
    expect(chat.currentContext()).not.toBeNull();

    (chat.root.querySelector(".chat-reset") as HTMLButtonElement).click();
    expect(chat.currentContext()).toBeNull();
    expect(chat.root.querySelector(".chat-divider")).not.toBeNull();

    await chat.send("is the chair sturdy");
    const secondBody = JSON.parse(fetchMock.mock.calls[1][1].body);
    expect(secondBody.context).toBeUndefined();
  });

  it("shows kind, score, and the feature breakdown on KB answers", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn().mockResolvedValue(
        jsonResponse({ answers: [kbAnswer(5, "The answer.", 0.876)], activeLearningEnabled: true }),
      ),
    );

    const chat = new ChatView(new Api(), "k1");
    document.body.append(chat.root);
    await chat.send("a question");

    const bubble = chat.root.querySelector(".bubble.bot")!;
    expect(bubble.classList.contains("kind-kb")).toBe(true);
    expect(bubble.textContent).toContain("QA #5");
    expect(bubble.textContent).toContain("score 0.876");
    expect(bubble.querySelector(".feature-table")!.textContent).toContain("semQ");
  });

  it("records feedback when an alternative is picked", async () => {
    const fetchMock = vi
      .fn()
      .mockResolvedValueOnce(
        jsonResponse({
          answers: [kbAnswer(1, "Top answer."), kbAnswer(2, "Better answer.", 0.4)],
          activeLearningEnabled: true,
        }),
      )
      .mockResolvedValueOnce(jsonResponse({ accepted: true, suggestionId: 9 }));
    vi.stubGlobal("fetch", fetchMock);

    const changed = vi.fn();
    const chat = new ChatView(new Api(), "k1", changed);
    document.body.append(chat.root);
    await chat.send("which answer");

    (chat.root.querySelector(".alt-pick") as HTMLButtonElement).click();
    await vi.waitFor(() => expect(changed).toHaveBeenCalled());

    const [url, options] = fetchMock.mock.calls[1];
    expect(url).toBe("/kbs/k1/feedback");
    expect(JSON.parse(options.body)).toEqual({
      queryText: "which answer",
      shownQaId: 1,
      selectedQaId: 2,
    });
  });

  it("drops a second question while one is outstanding", async () => {
    let release!: (response: Response) => void;
    const gate = new Promise<Response>((resolve) => {
      release = resolve;
    });
    const fetchMock = vi
      .fn()
      .mockReturnValueOnce(gate)
      .mockResolvedValue(
        jsonResponse({ answers: [kbAnswer(1, "Answer.")], activeLearningEnabled: true }),
      );
    vi.stubGlobal("fetch", fetchMock);

    const chat = new ChatView(new Api(), "k1");
    document.body.append(chat.root);

    const first = chat.send("question one");
    await chat.send("question two"); // dropped: the first call is still in flight
    expect(fetchMock).toHaveBeenCalledTimes(1);

    release(jsonResponse({ answers: [kbAnswer(1, "Answer.")], activeLearningEnabled: true }));
    await first;

    await chat.send("question three");
    expect(fetchMock).toHaveBeenCalledTimes(2);
    expect(JSON.parse(fetchMock.mock.calls[1][1].body).question).toBe("question three");
  });
});

const KB_DETAIL = {
  kbId: "k1",
  name: "Desk KB",
  persona: "none",
  revision: 4,
  synonyms: {},
  qaPairs: [
    {
      id: 1,
      question: "Know about XYZ",
      alternateQuestions: ["what is xyz", "is the chair sturdy"],
      answer: "XYZ is our shelving system.",
      parentId: null,
      source: null,
      metadata: {},
    },
    {
      id: 2,
      question: "Yes",
      alternateQuestions: [],
      answer: "It stacks.",
      parentId: 1,
      source: null,
      metadata: {},
    },
  ],
};

describe("EditorView", () => {
  it("renders questions, alternate chips, and parent links", async () => {
    vi.stubGlobal("fetch", vi.fn().mockResolvedValue(jsonResponse(KB_DETAIL)));

    const editor = new EditorView(new Api(), "k1");
    document.body.append(editor.root);
    await editor.load();

    const chips = [...editor.root.querySelectorAll(".alt-chip")].map((c) => c.textContent);
    expect(chips).toEqual(["what is xyz", "is the chair sturdy"]);
    expect(editor.root.textContent).toContain("follows #1");
    expect(editor.root.textContent).toContain("revision 4");
  });

  it("sends the loaded revision and shows a conflict banner on 409", async () => {
    const fetchMock = vi
      .fn()
      .mockResolvedValueOnce(jsonResponse(KB_DETAIL))
      .mockResolvedValueOnce(
        jsonResponse(
          { code: "revision_conflict", message: "expected revision 4, KB is at 6", details: [] },
          409,
        ),
      );
    vi.stubGlobal("fetch", fetchMock);

    const editor = new EditorView(new Api(), "k1");
    document.body.append(editor.root);
    await editor.load();

    const deleteButton = [...editor.root.querySelectorAll("button")].find(
      (b) => b.textContent === "Delete",
    )!;
    deleteButton.click();

    await vi.waitFor(() => {
      expect(editor.root.querySelector(".banner.conflict")).not.toBeNull();
    });
    const [, options] = fetchMock.mock.calls[1];
    expect(options.headers["X-Expected-Revision"]).toBe("4");
    expect(editor.root.textContent).toContain("Someone else changed this KB");
  });

  it("sends one patch when a button is double clicked", async () => {
    let release!: (response: Response) => void;
    const gate = new Promise<Response>((resolve) => {
      release = resolve;
    });
    const fetchMock = vi
      .fn()
      .mockResolvedValueOnce(jsonResponse(KB_DETAIL))
      .mockReturnValueOnce(gate)
      .mockResolvedValue(jsonResponse(KB_DETAIL));
    vi.stubGlobal("fetch", fetchMock);

    const editor = new EditorView(new Api(), "k1");
    document.body.append(editor.root);
    await editor.load();

    const deleteButton = [...editor.root.querySelectorAll("button")].find(
      (b) => b.textContent === "Delete",
    )!;
    deleteButton.click();
    deleteButton.click();

    release(jsonResponse(KB_DETAIL));
    // load, one patch, reload; the second click must not add a fourth call
    await vi.waitFor(() => expect(fetchMock).toHaveBeenCalledTimes(3));
    const patches = fetchMock.mock.calls.filter(([, options]) => options?.method === "PATCH");
    expect(patches.length).toBe(1);
  });
});

describe("SuggestionsView", () => {
  const SUGGESTIONS = [
    { suggestionId: 1, queryText: "when do you open", targetQaId: 3, origin: "feedback", createdAt: 1, clusterId: 0, status: "pending", representative: true },
    { suggestionId: 2, queryText: "when do you open up", targetQaId: 3, origin: "feedback", createdAt: 2, clusterId: 0, status: "pending", representative: false },
    { suggestionId: 3, queryText: "is the chair sturdy", targetQaId: 5, origin: "disagreement", createdAt: 3, clusterId: 1, status: "pending", representative: true },
  ];

  it("groups suggestions by cluster with the representative first", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn().mockResolvedValue(jsonResponse({ suggestions: SUGGESTIONS })),
    );

    const view = new SuggestionsView(new Api(), "k1");
    document.body.append(view.root);
    await view.load();

    const clusters = view.root.querySelectorAll(".cluster");
    expect(clusters.length).toBe(2);
    expect(clusters[0].textContent).toContain("2 similar suggestions");
    expect(clusters[0].querySelector(".suggestion")!.classList.contains("representative")).toBe(true);
    // cluster buttons only exist where there is a cluster to act on
    expect(clusters[0].textContent).toContain("Accept cluster");
    expect(clusters[1].textContent).not.toContain("Accept cluster");
  });

  it("resolves a whole cluster through its representative", async () => {
    const fetchMock = vi
      .fn()
      .mockResolvedValueOnce(jsonResponse({ suggestions: SUGGESTIONS }))
      .mockResolvedValueOnce(jsonResponse({ resolved: [1, 2], decision: "accept", revision: 5 }))
      .mockResolvedValueOnce(jsonResponse({ suggestions: [SUGGESTIONS[2]] }));
    vi.stubGlobal("fetch", fetchMock);

    const resolved = vi.fn();
    const view = new SuggestionsView(new Api(), "k1", resolved);
    document.body.append(view.root);
    await view.load();

    const acceptAll = [...view.root.querySelectorAll("button")].find(
      (b) => b.textContent === "Accept cluster",
    )!;
    acceptAll.click();
    await vi.waitFor(() => expect(resolved).toHaveBeenCalled());

    expect(fetchMock.mock.calls[1][0]).toBe("/kbs/k1/suggestions/1:resolve");
    expect(JSON.parse(fetchMock.mock.calls[1][1].body)).toEqual({
      decision: "accept",
      wholeCluster: true,
    });
    expect(view.root.querySelectorAll(".cluster").length).toBe(1);
  });

  it("resolves once when accept is double clicked", async () => {
    let release!: (response: Response) => void;
    const gate = new Promise<Response>((resolve) => {
      release = resolve;
    });
    const fetchMock = vi
      .fn()
      .mockResolvedValueOnce(jsonResponse({ suggestions: [SUGGESTIONS[2]] }))
      .mockReturnValueOnce(gate)
      .mockResolvedValue(jsonResponse({ suggestions: [] }));
    vi.stubGlobal("fetch", fetchMock);

    const view = new SuggestionsView(new Api(), "k1");
    document.body.append(view.root);
    await view.load();

    const accept = [...view.root.querySelectorAll("button")].find(
      (b) => b.textContent === "Accept",
    )!;
    accept.click();
    accept.click();

    release(jsonResponse({ resolved: [3], decision: "accept", revision: 2 }));
    await vi.waitFor(() => {
      expect(view.root.textContent).toContain("No pending suggestions.");
    });
    const resolves = fetchMock.mock.calls.filter(([url]) => String(url).includes(":resolve"));
    expect(resolves.length).toBe(1);
  });
});
