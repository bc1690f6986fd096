// Pure walkthrough session engine. Every transition follows exactly one
// edge of the loaded graph; the server is never consulted or mutated.

import type { BranchName, EdgeLabel, FlowGraph, FlowNode } from "./schema.js";

export type UserInput = "NEXT" | "YES" | "NO";

export interface HistoryEntry {
  node_id: string;
  shown_text: string;
  answer?: UserInput;
}

export interface SessionState {
  procedure_id: string;
  /** null once the walkthrough reached completion */
  current_node_id: string | null;
  history: HistoryEntry[];
  /** feedback for an ignored illegal input; cleared on legal moves */
  hint?: string;
}

export function nodeById(graph: FlowGraph, id: string): FlowNode {
  const node = graph.nodes.find((n) => n.id === id);
  if (!node) throw new Error(`unknown node ${id}`);
  return node;
}

export function outgoing(graph: FlowGraph, id: string): Partial<Record<EdgeLabel, string>> {
  const out: Partial<Record<EdgeLabel, string>> = {};
  for (const e of graph.edges) {
    if (e.from === id) out[e.label] = e.to;
  }
  return out;
}

export function shownText(node: FlowNode): string {
  return node.kind === "DECISION" ? node.question ?? node.text : node.text;
}

export function newSession(procedureId: string, graph: FlowGraph): SessionState {
  return {
    procedure_id: procedureId,
    current_node_id: graph.entry,
    history: [],
  };
}

export function legalInputs(graph: FlowGraph, state: SessionState): UserInput[] {
  if (state.current_node_id === null) return [];
  const node = nodeById(graph, state.current_node_id);
  return node.kind === "DECISION" ? ["YES", "NO"] : ["NEXT"];
}

function branchFor(node: FlowNode, input: UserInput): EdgeLabel {
  const yes: BranchName = node.yes_branch ?? "TRUE";
  if (input === "YES") return yes;
  return yes === "TRUE" ? "FALSE" : "TRUE";
}

export function advance(graph: FlowGraph, state: SessionState,
                        input: UserInput): SessionState {
  if (state.current_node_id === null) {
    return { ...state, hint: "The procedure is finished; restart to run it again." };
  }
  const node = nodeById(graph, state.current_node_id);
  const legal = node.kind === "DECISION" ? input === "YES" || input === "NO"
                                         : input === "NEXT";
  if (!legal) {
    const want = node.kind === "DECISION" ? "answer Yes or No" : "use Next";
    return { ...state, hint: `Please ${want} here.` };
  }
  const label: EdgeLabel = node.kind === "DECISION" ? branchFor(node, input) : "NEXT";
  const target = outgoing(graph, node.id)[label] ?? null;
  return {
    procedure_id: state.procedure_id,
    current_node_id: target,
    history: [...state.history,
              { node_id: node.id, shown_text: shownText(node), answer: input }],
  };
}

export function back(graph: FlowGraph, state: SessionState): SessionState {
  if (state.history.length === 0) return { ...state, hint: "Already at the start." };
  const history = state.history.slice(0, -1);
  const previous = state.history[state.history.length - 1];
  return {
    procedure_id: state.procedure_id,
    current_node_id: previous.node_id,
    history,
  };
}

export function restart(graph: FlowGraph, state: SessionState): SessionState {
  return newSession(state.procedure_id, graph);
}

export function isComplete(state: SessionState): boolean {
  return state.current_node_id === null;
}
