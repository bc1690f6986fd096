// Flow-graph schema (version 1) as exported by the mining pipeline.
// The walkthrough refuses to render anything that fails validation here.

export const FLOW_SCHEMA_VERSION = 1;

export type EdgeLabel = "NEXT" | "TRUE" | "FALSE";
export type NodeKind = "INSTRUCTION" | "DECISION";
export type BranchName = "TRUE" | "FALSE";

export interface FlowNode {
  id: string;
  kind: NodeKind;
  text: string;
  question?: string;
  yes_branch?: BranchName;
}

export interface FlowEdge {
  from: string;
  to: string;
  label: EdgeLabel;
}

export interface FlowGraph {
  version: number;
  source: { url: string; node_path: number[] };
  entry: string | null;
  nodes: FlowNode[];
  edges: FlowEdge[];
}

export interface ProcedureListing {
  id: string;
  title: string;
  source: { url?: string; node_path?: number[] };
}

export class FlowSchemaError extends Error {}

function fail(message: string): never {
  throw new FlowSchemaError(message);
}

export function validateFlow(data: unknown): FlowGraph {
  if (typeof data !== "object" || data === null) fail("flow is not an object");
  const d = data as Record<string, unknown>;
  if (d.version !== FLOW_SCHEMA_VERSION) {
    fail(`unsupported flow schema version ${String(d.version)}`);
  }
  if (!Array.isArray(d.nodes) || !Array.isArray(d.edges)) {
    fail("nodes/edges missing");
  }
  const ids = new Set<string>();
  for (const raw of d.nodes) {
    const n = raw as Record<string, unknown>;
    if (typeof n.id !== "string" || typeof n.text !== "string") {
      fail("node missing id/text");
    }
    if (n.kind !== "INSTRUCTION" && n.kind !== "DECISION") {
      fail(`bad node kind ${String(n.kind)}`);
    }
    if (n.kind === "DECISION") {
      if (typeof n.question !== "string") fail(`decision ${n.id} lacks a question`);
      if (n.yes_branch !== "TRUE" && n.yes_branch !== "FALSE") {
        fail(`decision ${n.id} lacks yes_branch`);
      }
    }
    if (ids.has(n.id)) fail(`duplicate node id ${n.id}`);
    ids.add(n.id);
  }
  const seen = new Set<string>();
  for (const raw of d.edges) {
    const e = raw as Record<string, unknown>;
    if (typeof e.from !== "string" || typeof e.to !== "string") {
      fail("edge missing endpoints");
    }
    if (!ids.has(e.from) || !ids.has(e.to)) {
      fail(`edge ${e.from}->${e.to} references unknown node`);
    }
    if (e.label !== "NEXT" && e.label !== "TRUE" && e.label !== "FALSE") {
      fail(`bad edge label ${String(e.label)}`);
    }
    const key = `${e.from}:${e.label}`;
    if (seen.has(key)) fail(`node ${e.from} has two ${e.label} edges`);
    seen.add(key);
  }
  const entry = d.entry;
  if (entry !== null && (typeof entry !== "string" || !ids.has(entry))) {
    fail("entry does not name a node");
  }
  const src = (d.source ?? {}) as Record<string, unknown>;
  return {
    version: FLOW_SCHEMA_VERSION,
    source: {
      url: typeof src.url === "string" ? src.url : "",
      node_path: Array.isArray(src.node_path) ? (src.node_path as number[]) : [],
    },
    entry: entry as string | null,
    nodes: d.nodes as unknown as FlowNode[],
    edges: d.edges as unknown as FlowEdge[],
  };
}
