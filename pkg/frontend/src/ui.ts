// DOM rendering: a procedure list view and the one-node-at-a-time
// walkthrough with a chat-style transcript. All state lives client-side.

import { ApiError, fetchFlow, fetchProcedures } from "./api.js";
import {
  SessionState, UserInput, advance, back, isComplete, newSession, nodeById,
  restart, shownText,
} from "./engine.js";
import { FlowGraph, FlowSchemaError, ProcedureListing } from "./schema.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className?: string, text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function banner(root: HTMLElement, message: string) {
  const box = el("div", "error-banner", message);
  root.prepend(box);
}

export function renderListView(root: HTMLElement) {
  root.innerHTML = "";
  const page = el("div", "page");
  page.appendChild(el("h1", "", "Guided troubleshooting"));
  const list = el("ul", "procedure-list");
  page.appendChild(list);
  root.appendChild(page);

  fetchProcedures()
    .then((items: ProcedureListing[]) => {
      if (items.length === 0) {
        list.appendChild(el("li", "empty", "No procedures available."));
        return;
      }
      for (const item of items) {
        const row = el("li", "procedure-row");
        const link = el("a", "", item.title || item.id);
        link.href = `#/p/${encodeURIComponent(item.id)}`;
        row.appendChild(link);
        if (item.source?.url) {
          row.appendChild(el("span", "source", item.source.url));
        }
        list.appendChild(row);
      }
    })
    .catch((err) => banner(page, `Could not load procedures: ${err.message}`));
}

export function renderSessionView(root: HTMLElement, procedureId: string) {
  root.innerHTML = "";
  const page = el("div", "page");
  root.appendChild(page);

  fetchFlow(procedureId)
    .then((graph) => {
      let state = newSession(procedureId, graph);
      const view = new SessionView(page, graph, () => state,
                                   (next) => { state = next; });
      view.draw();
    })
    .catch((err) => {
      if (err instanceof ApiError || err instanceof FlowSchemaError) {
        banner(page, `Cannot open procedure: ${err.message}`);
        const backLink = el("a", "back-link", "Back to the list");
        backLink.href = "#/";
        page.appendChild(backLink);
      } else {
        throw err;
      }
    });
}

class SessionView {
  constructor(
    private page: HTMLElement,
    private graph: FlowGraph,
    private getState: () => SessionState,
    private setState: (s: SessionState) => void,
  ) {}

  private apply(next: SessionState) {
    this.setState(next);
    this.draw();
  }

  draw() {
    const state = this.getState();
    this.page.innerHTML = "";
    const head = el("div", "session-head");
    const backLink = el("a", "back-link", "All procedures");
    backLink.href = "#/";
    head.appendChild(backLink);
    head.appendChild(el("h1", "", state.procedure_id));
    this.page.appendChild(head);

    this.page.appendChild(this.transcript(state));

    if (state.hint) this.page.appendChild(el("div", "hint", state.hint));

    const card = el("div", "current-card");
    if (isComplete(state)) {
      card.appendChild(el("p", "done", "Procedure finished."));
    } else {
      const node = nodeById(this.graph, state.current_node_id!);
      card.appendChild(el("p", node.kind === "DECISION" ? "question" : "step",
                          shownText(node)));
      for (const [label, input] of this.controls(node.kind)) {
        const button = el("button", "answer", label);
        button.addEventListener("click", () =>
          this.apply(advance(this.graph, this.getState(), input)));
        card.appendChild(button);
      }
    }
    this.page.appendChild(card);

    const nav = el("div", "session-nav");
    const backButton = el("button", "nav", "Back");
    backButton.disabled = state.history.length === 0;
    backButton.addEventListener("click", () =>
      this.apply(back(this.graph, this.getState())));
    const restartButton = el("button", "nav", "Restart");
    restartButton.addEventListener("click", () =>
      this.apply(restart(this.graph, this.getState())));
    nav.appendChild(backButton);
    nav.appendChild(restartButton);
    this.page.appendChild(nav);
  }

  private controls(kind: string): Array<[string, UserInput]> {
    return kind === "DECISION"
      ? [["Yes", "YES"], ["No", "NO"]]
      : [["Next", "NEXT"]];
  }

  private transcript(state: SessionState): HTMLElement {
    const panel = el("div", "transcript");
    for (const entry of state.history) {
      const bubble = el("div", "bubble bot", entry.shown_text);
      panel.appendChild(bubble);
      if (entry.answer) {
        panel.appendChild(el("div", "bubble user",
                             entry.answer === "NEXT" ? "Next" :
                             entry.answer === "YES" ? "Yes" : "No"));
      }
    }
    return panel;
  }
}

export function route() {
  const root = document.getElementById("app");
  if (!root) return;
  const hash = window.location.hash;
  const match = /^#\/p\/(.+)$/.exec(hash);
  if (match) {
    renderSessionView(root, decodeURIComponent(match[1]));
  } else {
    renderListView(root);
  }
}
