// Walkthrough engine tests, including the replay property (S1) and the
// SDK-integration transcript (S2). Fixture flows were produced by the
// mining pipeline through its public export schema.

import { readFileSync, readdirSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import {
  SessionState, UserInput, advance, back, isComplete, legalInputs,
  newSession, nodeById, outgoing, restart, shownText,
} from "../src/engine.js";
import { FlowGraph, FlowSchemaError, validateFlow } from "../src/schema.js";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

function loadFlow(name: string): FlowGraph {
  return validateFlow(JSON.parse(readFileSync(join(FIXTURES, name), "utf-8")));
}

function allFixtures(): Array<[string, FlowGraph]> {
  return readdirSync(FIXTURES)
    .filter((f) => f.endsWith(".json"))
    .sort()
    .map((f) => [f, loadFlow(f)]);
}

// deterministic 32-bit RNG for the replay property
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

describe("schema validation", () => {
  it("accepts every fixture flow", () => {
    const fixtures = allFixtures();
    expect(fixtures.length).toBe(10);
    for (const [, graph] of fixtures) {
      expect(graph.version).toBe(1);
    }
  });

  it("rejects a version mismatch outright", () => {
    const raw = JSON.parse(readFileSync(join(FIXTURES, "flow_fig1a.json"), "utf-8"));
    raw.version = 2;
    expect(() => validateFlow(raw)).toThrow(FlowSchemaError);
  });

  it("rejects decisions without question or yes_branch", () => {
    const raw = JSON.parse(readFileSync(join(FIXTURES, "flow_fig1a.json"), "utf-8"));
    for (const node of raw.nodes) {
      if (node.kind === "DECISION") delete node.yes_branch;
    }
    expect(() => validateFlow(raw)).toThrow(FlowSchemaError);
  });

  it("rejects dangling edges", () => {
    const raw = JSON.parse(readFileSync(join(FIXTURES, "flow_fig1a.json"), "utf-8"));
    raw.edges.push({ from: "n0", to: "missing", label: "NEXT" });
    expect(() => validateFlow(raw)).toThrow(FlowSchemaError);
  });
});

describe("session basics", () => {
  const graph = loadFlow("flow_fig1a.json");

  it("starts at the entry node", () => {
    const state = newSession("flow_fig1a", graph);
    expect(state.current_node_id).toBe(graph.entry);
    expect(state.history).toEqual([]);
  });

  it("NEXT walks the instruction chain", () => {
    let state = newSession("flow_fig1a", graph);
    const first = nodeById(graph, state.current_node_id!);
    expect(first.kind).toBe("INSTRUCTION");
    state = advance(graph, state, "NEXT");
    expect(state.history).toHaveLength(1);
    expect(state.history[0].shown_text).toBe(shownText(first));
    expect(state.history[0].answer).toBe("NEXT");
  });

  it("illegal input is ignored with a hint and no history growth", () => {
    const state = newSession("flow_fig1a", graph);
    const poked = advance(graph, state, "YES");
    expect(poked.current_node_id).toBe(state.current_node_id);
    expect(poked.history).toHaveLength(0);
    expect(poked.hint).toMatch(/Next/);
  });

  it("back pops exactly one entry; restart resets to entry", () => {
    let state = newSession("flow_fig1a", graph);
    state = advance(graph, state, "NEXT");
    state = advance(graph, state, "NEXT");
    expect(state.history).toHaveLength(2);
    const popped = back(graph, state);
    expect(popped.history).toHaveLength(1);
    expect(popped.current_node_id).toBe(state.history[1].node_id);
    const reset = restart(graph, popped);
    expect(reset.current_node_id).toBe(graph.entry);
    expect(reset.history).toEqual([]);
  });

  it("back at the start is a no-op with a hint", () => {
    const state = newSession("flow_fig1a", graph);
    const popped = back(graph, state);
    expect(popped.current_node_id).toBe(graph.entry);
    expect(popped.hint).toMatch(/start/);
  });

  it("NEXT at a terminal node reaches completion and input is then ignored", () => {
    let state = newSession("flow_fig1a", graph);
    let guard = 0;
    while (!isComplete(state) && guard++ < 50) {
      const node = nodeById(graph, state.current_node_id!);
      state = advance(graph, state, node.kind === "DECISION" ? "NO" : "NEXT");
    }
    expect(isComplete(state)).toBe(true);
    const history = state.history.length;
    const after = advance(graph, state, "NEXT");
    expect(after.current_node_id).toBeNull();
    expect(after.history).toHaveLength(history);
    expect(after.hint).toMatch(/finished/);
  });
});

describe("fig 1(b) conversation path", () => {
  it("answering No at the LED question reaches power-off then wait/replace", () => {
    const graph = loadFlow("flow_fig1a.json");
    let state = newSession("flow_fig1a", graph);
    // walk to the LED decision
    while (nodeById(graph, state.current_node_id!).kind !== "DECISION") {
      state = advance(graph, state, "NEXT");
    }
    const question = shownText(nodeById(graph, state.current_node_id!));
    expect(question).toBe(
      "Do the LEDs show a fault on the power supplies or batteries?");
    state = advance(graph, state, "NO");
    const effect = nodeById(graph, state.current_node_id!);
    expect(effect.text).toContain("power off both power supplies");
    state = advance(graph, state, "NEXT");
    expect(nodeById(graph, state.current_node_id!).text).toContain(
      "Wait 20 seconds");
  });
});

describe("S2: Fig 6 transcript", () => {
  it("Yes at the subgroup question shows delete-subgroup then create-subgroup", () => {
    const graph = loadFlow("flow_sdk_fig6.json");
    let state = newSession("flow_sdk_fig6", graph);
    while (nodeById(graph, state.current_node_id!).kind !== "DECISION") {
      state = advance(graph, state, "NEXT");
    }
    expect(shownText(nodeById(graph, state.current_node_id!))).toBe(
      "Do you have the IBM Digital Analytics subgroup already?");
    state = advance(graph, state, "YES");
    const shown: string[] = [];
    shown.push(nodeById(graph, state.current_node_id!).text);
    state = advance(graph, state, "NEXT");
    shown.push(nodeById(graph, state.current_node_id!).text);
    expect(shown[0]).toContain("delete everything from the subgroup");
    expect(shown[1]).toContain("Create a subgroup in your project called");
    // the delete instruction precedes the create instruction
    expect(shown[0].toLowerCase().indexOf("delete")).toBe(0);
  });
});

describe("decision entry node", () => {
  it("shows the question first when the entry is a decision", () => {
    const graph = validateFlow({
      version: 1,
      source: { url: "synthetic", node_path: [0] },
      entry: "n0",
      nodes: [
        { id: "n0", kind: "DECISION", text: "the light is blinking",
          question: "Is the light blinking?", yes_branch: "TRUE" },
        { id: "n1", kind: "INSTRUCTION", text: "replace the battery" },
      ],
      edges: [{ from: "n0", to: "n1", label: "TRUE" }],
    });
    const state = newSession("synthetic", graph);
    expect(shownText(nodeById(graph, state.current_node_id!))).toBe(
      "Is the light blinking?");
    expect(legalInputs(graph, state)).toEqual(["YES", "NO"]);
    const yes = advance(graph, state, "YES");
    expect(yes.current_node_id).toBe("n1");
    const no = advance(graph, state, "NO");
    expect(no.current_node_id).toBeNull(); // no FALSE edge: completion
  });
});

describe("S1: random replay soundness", () => {
  it("1000 seeded answer sequences never leave the graph and always terminate", () => {
    // deep-freeze every graph: the engine must never mutate it
    const fixtures = allFixtures().map(([name, graph]) => {
      graph.nodes.forEach((n) => Object.freeze(n));
      graph.edges.forEach((e) => Object.freeze(e));
      Object.freeze(graph.nodes);
      Object.freeze(graph.edges);
      return [name, Object.freeze(graph)] as [string, FlowGraph];
    });
    expect(fixtures.length).toBe(10);
    let sequences = 0;
    for (const [name, graph] of fixtures) {
      for (let run = 0; run < 100; run++) {
        const rng = mulberry32(run * 7919 + name.length);
        let state: SessionState = newSession(name, graph);
        let steps = 0;
        const cap = graph.nodes.length + 2; // acyclic: must finish in |V| moves
        while (!isComplete(state)) {
          expect(steps).toBeLessThanOrEqual(cap);
          const before = state.current_node_id!;
          const legal = legalInputs(graph, state);
          // occasionally poke an illegal input: it must be rejected cleanly
          const pool: UserInput[] =
            rng() < 0.15 ? ["NEXT", "YES", "NO"] : legal;
          const input = pool[Math.floor(rng() * pool.length)];
          const next = advance(graph, state, input);
          if (!legal.includes(input)) {
            expect(next.current_node_id).toBe(before);
            expect(next.history.length).toBe(state.history.length);
            state = next;
            continue;
          }
          steps += 1;
          // the transition taken corresponds to exactly one edge
          const out = outgoing(graph, before);
          const node = nodeById(graph, before);
          let expected: string | null;
          if (node.kind === "DECISION") {
            const label = input === "YES"
              ? node.yes_branch!
              : node.yes_branch === "TRUE" ? "FALSE" : "TRUE";
            expected = out[label] ?? null;
          } else {
            expected = out.NEXT ?? null;
          }
          expect(next.current_node_id).toBe(expected);
          expect(next.history[next.history.length - 1].node_id).toBe(before);
          state = next;
        }
        sequences += 1;
      }
    }
    expect(sequences).toBe(1000);
  });
});
