import itertools

import pytest

from fixture_blocks import build_cases
from procmine.corpus import ABLATION_ROWS
from procmine.errors import InconsistentBlocksError
from procmine.flow import (BlockMember, BlockRules, Branch, DecisionBlock,
                           DecisionPoint, FlowGraph, Procedure, Step,
                           build_flow_graph, extract_decision_block,
                           extract_decision_points, flow_from_dict,
                           flow_to_dict, generate_question, map_instructions,
                           mine_flow, question_for_split)
from procmine.ingest import Sentence
from procmine.linguistics import (ConditionalSplit, Polarity, Trigger,
                                  detect_conditional)

S = Sentence.from_text


def make_procedure(step_texts, breaks=None):
    breaks = breaks or {}
    steps = [Step(index=i, sentences=[S(t) for t in texts], sublist_paths=[],
                  paragraph_breaks=list(breaks.get(i, [])))
             for i, texts in enumerate(step_texts)]
    return Procedure(doc_url="test://p", node_path=(0,), steps=steps,
                     context=[])


def graph_checks(g: FlowGraph):
    """Acyclicity and single-entry reachability."""
    adjacency = {}
    for a, b, _ in g.edges:
        adjacency.setdefault(a, []).append(b)
    seen, stack = set(), [g.entry]
    while stack:
        n = stack.pop()
        if n in seen:
            continue
        seen.add(n)
        stack.extend(adjacency.get(n, []))
    assert seen == {n.id for n in g.nodes}, "unreachable nodes"
    # topological order exists (DFS with colors)
    colors = {}

    def visit(n):
        if colors.get(n) == 1:
            raise AssertionError("cycle detected")
        if colors.get(n) == 2:
            return
        colors[n] = 1
        for m in adjacency.get(n, []):
            visit(m)
        colors[n] = 2

    for node in g.nodes:
        visit(node.id)


class TestExtractDecisionPoints:
    def test_fig1a_led_decision_found(self, fig1a_procedure):
        points = extract_decision_points(fig1a_procedure)
        conds = [p.split.condition for p in points]
        assert any("LEDs do not show a fault" in c for c in conds)

    def test_no_conditionals(self):
        proc = make_procedure([["Open the cover."], ["Close the cover."]])
        assert extract_decision_points(proc) == []

    def test_complement_verb_contributes_nothing(self):
        proc = make_procedure([["Check if the node is online."]])
        assert extract_decision_points(proc) == []

    def test_document_order(self, fig1a_procedure):
        points = extract_decision_points(fig1a_procedure)
        positions = [p.position for p in points]
        assert positions == sorted(positions)


class TestExtractDecisionBlock:
    def test_fig1a_block_boundary(self, fig1a_procedure):
        d = extract_decision_points(fig1a_procedure)[0]
        block = extract_decision_block(fig1a_procedure, d)
        texts = [fig1a_procedure.sentence_at(*m.position).text
                 for m in block.members]
        assert any(t.startswith("Wait 20 seconds") for t in texts)
        assert not any("node canisters continue" in t for t in texts)

    def test_note_rule(self):
        proc = make_procedure([[
            "If the light is blinking, replace the battery.",
            "Wait twenty seconds.",
            "Note: this voids the warranty.",
        ]])
        d = extract_decision_points(proc)[0]
        block = extract_decision_block(proc, d)
        assert [m.position for m in block.members] == [(0, 1)]

    def test_absorb_similar_next_step(self):
        proc = make_procedure([
            ["If the slot status is missing, switch it off."],
            ["If the slot status is failed, restart the node."],
        ])
        d = extract_decision_points(proc)[0]
        block = extract_decision_block(proc, d)
        assert block.absorbed_steps == [1]
        assert [m.position for m in block.members] == [(1, 0)]
        assert block.members[0].branch is Branch.FALSE

    def test_empty_block_is_valid(self):
        proc = make_procedure([
            ["Check the panel.", "If the light is on, press reset."],
            ["Unrelated follow-up step."],
        ])
        d = extract_decision_points(proc)[0]
        block = extract_decision_block(proc, d)
        assert block.members == []

    def test_baseline_equals_rest_of_step(self):
        """With all rules off the block is exactly the rest of the step."""
        for case in build_cases():
            proc = case.procedure()
            d = case.decision_point()
            block = extract_decision_block(proc, d, BlockRules.baseline())
            si, qi = case.decision
            expected = [(si, k) for k in
                        range(qi + 1, len(proc.steps[si].sentences))]
            assert [m.position for m in block.members] == expected

    def test_rule_fixture_suite_monotone(self):
        cases = build_cases()
        assert len(cases) >= 40
        accs = []
        for label, rules in ABLATION_ROWS:
            correct = sum(
                frozenset(m.position for m in
                          extract_decision_block(c.procedure(),
                                                 c.decision_point(),
                                                 rules).members) == c.expected
                for c in cases)
            accs.append(correct / len(cases))
        assert all(a <= b + 1e-12 for a, b in zip(accs, accs[1:]))
        assert accs[-1] >= 0.85


class TestMapInstructions:
    def _block(self, proc, d_pos, member_positions):
        split = detect_conditional(proc.sentence_at(*d_pos))
        d = DecisionPoint(d_pos[0], d_pos[1], split)
        members = [BlockMember(s, q, Branch.TRUE) for s, q in member_positions]
        return DecisionBlock(decision=d, members=members), proc

    def test_otherwise_flips_to_false(self):
        proc = make_procedure([[
            "If the light is blinking, replace the battery.",
            "Wait twenty seconds.",
            "Otherwise, contact support.",
        ]])
        block, proc = self._block(proc, (0, 0), [(0, 1), (0, 2)])
        labeled = map_instructions(block, proc)
        assert [m.branch for m in labeled.members] == [Branch.TRUE, Branch.FALSE]

    def test_parallel_conditional_flips(self):
        proc = make_procedure([[
            "If the slot status is missing, then switch it off.",
            "If the slot status is failed, then restart.",
        ]])
        block, proc = self._block(proc, (0, 0), [(0, 1)])
        labeled = map_instructions(block, proc)
        assert labeled.members[0].branch is Branch.FALSE

    def test_nested_conditional_stays_true(self):
        proc = make_procedure([[
            "If the power supply error LED is off, this state is the normal condition.",
            "If the error is not automatically fixed after 2 minutes, replace the system board.",
        ]])
        block, proc = self._block(proc, (0, 0), [(0, 1)])
        labeled = map_instructions(block, proc)
        assert labeled.members[0].branch is Branch.TRUE

    def test_branch_monotone_never_back_to_true(self):
        proc = make_procedure([[
            "If the light is blinking, replace the battery.",
            "Wait twenty seconds.",
            "Otherwise, contact support.",
            "Record the result.",
            "Close the case.",
        ]])
        block, proc = self._block(proc, (0, 0),
                                  [(0, k) for k in range(1, 5)])
        labeled = map_instructions(block, proc)
        branches = [m.branch for m in labeled.members]
        if Branch.FALSE in branches:
            first_false = branches.index(Branch.FALSE)
            assert all(b is Branch.FALSE for b in branches[first_false:])


class TestBuildFlowGraph:
    def test_plain_chain(self):
        proc = make_procedure([["Open the cover."], ["Remove the battery."],
                               ["Close the cover."]])
        g = build_flow_graph(proc, [])
        assert [n.kind for n in g.nodes] == ["INSTRUCTION"] * 3
        assert [(a, b, l) for a, b, l in g.edges] == \
            [("n0", "n1", "NEXT"), ("n1", "n2", "NEXT")]
        graph_checks(g)

    def test_fig1a_isomorphic_to_flowchart(self, fig1a_procedure):
        g = mine_flow(fig1a_procedure)
        kinds = [(n.kind, n.text) for n in g.nodes]
        decision_ids = [n.id for n in g.nodes if n.kind == "DECISION"]
        assert len(decision_ids) == 2
        led, canister = decision_ids
        out_led = g.outgoing(led)
        assert g.node(out_led["TRUE"]).text.startswith("power off both")
        wait_id = g.outgoing(out_led["TRUE"])["NEXT"]
        assert g.node(wait_id).text.startswith("Wait 20 seconds")
        # both branches rejoin at the second decision
        assert g.outgoing(wait_id)["NEXT"] == canister
        assert out_led["FALSE"] == canister
        assert g.node(g.outgoing(canister)["TRUE"]).text == \
            "replace the enclosure chassis"
        graph_checks(g)

    def test_nested_conditional_reachable_via_true_only(self):
        proc = make_procedure([[
            "If the power supply error LED is off, this state is the normal condition.",
            "If the error is not automatically fixed after 2 minutes, replace the system board.",
            "Record the outcome.",
        ]])
        g = mine_flow(proc)
        outer, inner = [n.id for n in g.nodes if n.kind == "DECISION"]
        # the inner decision hangs off the outer TRUE path: its only
        # inbound edge comes from the outer effect instruction
        outer_out = g.outgoing(outer)
        effect = outer_out["TRUE"]
        assert g.outgoing(effect)["NEXT"] == inner
        inbound = [(a, label) for a, b, label in g.edges if b == inner]
        assert inbound == [(effect, "NEXT")]
        assert outer_out.get("FALSE") != inner
        graph_checks(g)

    def test_parallel_conditional_chained_on_false_edge(self):
        proc = make_procedure([
            ["If the slot status is missing, switch it off."],
            ["If the slot status is failed, restart the node.",
             "Record the slot state."],
        ])
        g = mine_flow(proc)
        first, second = [n.id for n in g.nodes if n.kind == "DECISION"]
        assert g.outgoing(first)["FALSE"] == second
        graph_checks(g)

    def test_sentence_conservation(self, fig1a_procedure):
        g = mine_flow(fig1a_procedure)
        sentence_nodes = {}
        for n in g.nodes:
            prov = n.provenance
            assert prov is not None
            key = prov[:2]
            sentence_nodes.setdefault(key, []).append(n)
        all_positions = {(s.index, qi) for s in fig1a_procedure.steps
                         for qi in range(len(s.sentences))}
        assert set(sentence_nodes) == all_positions
        # a decision sentence contributes its DECISION node plus the
        # effect instruction; plain sentences contribute exactly one node
        for key, nodes in sentence_nodes.items():
            kinds = sorted(n.provenance[2] for n in nodes)
            assert kinds in (["sentence"], ["condition", "effect"])

    def test_inconsistent_blocks_rejected(self):
        proc = make_procedure([
            ["If the light is blinking, replace the battery.",
             "Wait twenty seconds."],
            ["If the door is open, close the door.",
             "Latch it firmly."],
        ])
        points = extract_decision_points(proc)
        b1 = DecisionBlock(decision=points[0],
                           members=[BlockMember(1, 1, Branch.TRUE)])
        b2 = DecisionBlock(decision=points[1],
                           members=[BlockMember(1, 1, Branch.TRUE)])
        with pytest.raises(InconsistentBlocksError):
            build_flow_graph(proc, [b1, b2])

    def test_every_fixture_graph_sound(self):
        for case in build_cases():
            g = mine_flow(case.procedure())
            graph_checks(g)
            for n in g.nodes:
                out = g.outgoing(n.id)
                if n.kind == "DECISION":
                    assert "NEXT" not in out
                    assert len(out) <= 2
                else:
                    assert set(out) <= {"NEXT"}

    def test_export_round_trip(self, fig1a_procedure):
        g = mine_flow(fig1a_procedure)
        d = flow_to_dict(g)
        assert d["version"] == 1
        g2 = flow_from_dict(d)
        assert flow_to_dict(g2) == d
        assert {n["kind"] for n in d["nodes"]} <= {"INSTRUCTION", "DECISION"}
        for n in d["nodes"]:
            if n["kind"] == "DECISION":
                assert "question" in n and n["yes_branch"] in ("TRUE", "FALSE")


class TestGenerateQuestion:
    def _split(self, sentence):
        return detect_conditional(S(sentence))

    def test_fig6_subgroup_question(self):
        split = self._split(
            "If you already have the IBM Digital Analytics subgroup, "
            "delete everything from the subgroup then use the command.")
        q = question_for_split(split)
        assert q.text == "Do you have the IBM Digital Analytics subgroup already?"
        assert q.yes_branch is Branch.TRUE

    def test_negated_condition_question(self):
        split = self._split(
            "If the LEDs do not show a fault on the power supplies or "
            "batteries, power off both power supplies in the enclosure.")
        q = question_for_split(split)
        assert q.text == \
            "Do the LEDs show a fault on the power supplies or batteries?"
        assert q.yes_branch is Branch.FALSE
        assert q.no_branch is Branch.TRUE

    def test_unless_question(self):
        split = self._split(
            "Unless both nodes in the I/O group are online, fix the problem "
            "that is causing the node to be offline first.")
        q = question_for_split(split)
        assert q.text == "Are both nodes in the I/O group online?"
        assert q.yes_branch is Branch.FALSE

    def test_fallback_template(self):
        split = self._split(
            "If both node canisters continue to report this error replace "
            "the enclosure chassis.")
        q = question_for_split(split)
        assert q.text.startswith("Is the following true:")
        assert q.yes_branch is Branch.TRUE

    def test_truth_table_yes_follows_effect_exactly_when_condition_holds(self):
        """Enumerate (negated, inverted); 'yes' must reach the effect iff
        the original condition (with polarity) makes the effect apply."""
        for neg, inv in itertools.product((False, True), repeat=2):
            cond = "the light is not blinking" if neg else "the light is blinking"
            split = ConditionalSplit(
                trigger=Trigger.UNLESS if inv else Trigger.IF,
                trigger_index=0, condition=cond, effect="replace the battery",
                polarity=Polarity.INVERTED if inv else Polarity.DIRECT,
                condition_negated=neg)
            q = question_for_split(split)
            # surface question is affirmative, so answering yes states that
            # the light IS blinking; recover the original condition's truth
            condition_true = not neg
            effect_applies = condition_true != inv
            lands_on_effect = q.yes_branch is Branch.TRUE
            assert lands_on_effect == effect_applies, (neg, inv)

    def test_generate_question_wraps_decision_point(self):
        split = self._split("If the light is blinking, replace the battery.")
        d = DecisionPoint(0, 0, split)
        assert generate_question(d).text == "Is the light blinking?"
