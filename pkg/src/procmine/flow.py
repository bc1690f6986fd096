"""Deep mining of a classified procedure: decision points, decision
blocks, branch mapping, flow-graph construction, and yes/no question
generation for the guided walkthrough.

Branch semantics: a decision node's TRUE edge is always the path on which
the conditional's effect executes. Question generation compensates for
inverted triggers (unless) and negated conditions when binding the user's
"yes" to a branch, so following the answered branch runs the effect
exactly when the original condition (with its polarity) holds.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .errors import InconsistentBlocksError
from .ingest import ListCandidate, Sentence, token_spans
from .linguistics import (ConditionalSplit, ImperativeLexicon, Polarity,
                          default_lexicon, detect_conditional, similarity)

FLOW_SCHEMA_VERSION = 1

INFO_CUES = frozenset({"note", "information", "important", "tip"})
ELSE_CUES = frozenset({"else", "otherwise"})


class Branch(str, Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"


@dataclass
class Step:
    index: int
    sentences: list[Sentence]
    sublist_paths: list[tuple[int, ...]]
    paragraph_breaks: list[int]


@dataclass
class Procedure:
    doc_url: str
    node_path: tuple[int, ...]
    steps: list[Step]
    context: list[Sentence]

    @classmethod
    def from_candidate(cls, cand: ListCandidate) -> "Procedure":
        steps = [Step(index=i, sentences=item.sentences,
                      sublist_paths=item.sublist_paths,
                      paragraph_breaks=item.paragraph_breaks)
                 for i, item in enumerate(cand.items)]
        return cls(doc_url=cand.doc_url, node_path=cand.node_path,
                   steps=steps, context=cand.context)

    def sentence_at(self, step_index: int, sentence_index: int) -> Sentence:
        return self.steps[step_index].sentences[sentence_index]


@dataclass(frozen=True)
class DecisionPoint:
    step_index: int
    sentence_index: int
    split: ConditionalSplit

    @property
    def position(self) -> tuple[int, int]:
        return (self.step_index, self.sentence_index)


@dataclass(frozen=True)
class BlockMember:
    step_index: int
    sentence_index: int
    branch: Branch

    @property
    def position(self) -> tuple[int, int]:
        return (self.step_index, self.sentence_index)


@dataclass
class DecisionBlock:
    decision: DecisionPoint
    members: list[BlockMember]
    absorbed_steps: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class BlockRules:
    """Which extraction rules run on top of the rest-of-step baseline."""
    note_rule: bool = True        # stop before information sentences
    structure_rule: bool = True   # stop at paragraph / sub-list boundaries
    overlap_rule: bool = True     # absorb a similar next-step conditional
    overlap_threshold: float = 0.7
    sim_threshold: float = 0.7    # parallel-vs-nested mapping

    @classmethod
    def baseline(cls) -> "BlockRules":
        return cls(note_rule=False, structure_rule=False, overlap_rule=False)


# --------------------------------------------------------------------------
# Decision points and blocks
# --------------------------------------------------------------------------

def extract_decision_points(p: Procedure,
                            lex: ImperativeLexicon | None = None) -> list[DecisionPoint]:
    lex = lex or default_lexicon()
    points: list[DecisionPoint] = []
    for step in p.steps:
        for qi, sentence in enumerate(step.sentences):
            split = detect_conditional(sentence, lex)
            if split is not None:
                points.append(DecisionPoint(step.index, qi, split))
    return points


def _is_info_sentence(s: Sentence) -> bool:
    return bool(s.tokens) and s.tokens[0] in INFO_CUES


def _starts_false_cue(s: Sentence) -> bool:
    toks = s.tokens
    if not toks:
        return False
    if toks[0] in ELSE_CUES:
        return True
    return len(toks) > 1 and toks[0] in ("or", "and") and toks[1] in ELSE_CUES


def extract_decision_block(p: Procedure, d: DecisionPoint,
                           rules: BlockRules | None = None,
                           lex: ImperativeLexicon | None = None) -> DecisionBlock:
    """Member sentences of a decision block.

    Baseline is the rest of the decision's step; the note rule stops
    before information sentences, the structure rule stops at the first
    sentence past a paragraph/sub-list boundary, and the overlap rule
    absorbs following steps that open with a conditional similar to the
    decision's condition. Absorption only applies when the step was
    consumed to its end, so members stay contiguous.
    """
    rules = rules or BlockRules()
    lex = lex or default_lexicon()
    step = p.steps[d.step_index]
    positions: list[tuple[int, int]] = []
    stopped_early = False
    for qi in range(d.sentence_index + 1, len(step.sentences)):
        if rules.structure_rule and qi in step.paragraph_breaks:
            stopped_early = True
            break
        if rules.note_rule and _is_info_sentence(step.sentences[qi]):
            stopped_early = True
            break
        positions.append((d.step_index, qi))

    absorbed: list[int] = []
    if rules.overlap_rule and not stopped_early:
        si = d.step_index + 1
        while si < len(p.steps):
            nxt = p.steps[si]
            if not nxt.sentences:
                break
            head = detect_conditional(nxt.sentences[0], lex)
            if head is None:
                break
            if similarity(head.condition, d.split.condition) < rules.overlap_threshold:
                break
            absorbed.append(si)
            positions.extend((si, qi) for qi in range(len(nxt.sentences)))
            si += 1  # chained parallel steps, experimental

    block = DecisionBlock(
        decision=d,
        members=[BlockMember(si, qi, Branch.TRUE) for si, qi in positions],
        absorbed_steps=absorbed,
    )
    return map_instructions(block, p, rules.sim_threshold, lex)


def map_instructions(block: DecisionBlock, p: Procedure,
                     sim_threshold: float = 0.7,
                     lex: ImperativeLexicon | None = None) -> DecisionBlock:
    """Label members TRUE until an else/otherwise cue or a parallel
    conditional flips the rest to FALSE; a nested conditional (low
    similarity) keeps the TRUE run going."""
    lex = lex or default_lexicon()
    branch = Branch.TRUE
    labeled: list[BlockMember] = []
    for m in block.members:
        s = p.sentence_at(m.step_index, m.sentence_index)
        if branch is Branch.TRUE:
            if _starts_false_cue(s):
                branch = Branch.FALSE
            else:
                split = detect_conditional(s, lex)
                if split is not None and \
                        similarity(split.condition, block.decision.split.condition) >= sim_threshold:
                    branch = Branch.FALSE
        labeled.append(BlockMember(m.step_index, m.sentence_index, branch))
    return DecisionBlock(decision=block.decision, members=labeled,
                         absorbed_steps=list(block.absorbed_steps))


# --------------------------------------------------------------------------
# Question generation
# --------------------------------------------------------------------------

COPULAS = ("is", "are", "was", "were", "has", "have", "can", "does", "do")
_CONTRACTIONS = {
    "isn't": "is", "aren't": "are", "wasn't": "was", "weren't": "were",
    "hasn't": "has", "haven't": "have", "can't": "can", "cannot": "can",
    "doesn't": "does", "don't": "do",
}
_RELOCATABLE_ADVERBS = frozenset({"already", "still", "also", "just", "yet"})
_REMOVABLE_NEG = frozenset({"not", "never"})
_HARD_NEG = frozenset({"no", "without", "unable", "fails", "fail"})
_IRREGULAR_PARTICIPLES = frozenset(
    {"been", "done", "gone", "made", "taken", "given", "found", "shown",
     "seen", "set", "run", "put", "built", "sent", "left", "kept", "held",
     "brought", "begun", "written", "stood", "heard", "met", "paid",
     "read", "grown", "lost", "fallen", "drawn", "broken", "spent", "cut",
     "risen", "driven", "bought", "worn", "chosen", "caught", "dealt",
     "won", "thrown", "got", "gotten", "become", "come", "sold", "told",
     "understood", "swapped", "plugged"}
)


@dataclass(frozen=True)
class QuestionSpec:
    text: str
    yes_branch: Branch
    no_branch: Branch


def _decap(word: str) -> str:
    if len(word) > 1 and word[0].isupper() and word[1:].islower():
        return word.lower()
    return word


def _looks_participle(token: str) -> bool:
    return token.endswith("ed") or token in _IRREGULAR_PARTICIPLES


def question_for_split(split: ConditionalSplit) -> QuestionSpec:
    """Yes/no question from a condition, with negation lifted out of the
    surface form whenever that keeps the question grammatical."""
    cond = split.condition
    spans = token_spans(cond)
    tokens = [t for t, _, _ in spans]
    words = [cond[a:b] for _, a, b in spans]
    neg = split.condition_negated
    inv = split.polarity is Polarity.INVERTED

    def bind(negation_removed: bool) -> tuple[Branch, Branch]:
        if negation_removed:
            yes = Branch.TRUE if neg == inv else Branch.FALSE
        else:
            yes = Branch.FALSE if inv else Branch.TRUE
        return yes, Branch.FALSE if yes is Branch.TRUE else Branch.TRUE

    v = next((i for i, t in enumerate(tokens)
              if t in COPULAS or t in _CONTRACTIONS), None)
    hard_neg = any(t in _HARD_NEG for t in tokens)
    if v is None or v == 0:
        yes, no = bind(False)
        return QuestionSpec(text=f"Is the following true: {cond}?",
                            yes_branch=yes, no_branch=no)

    if hard_neg:
        # Mixed negation forms: keep every negation in the surface form.
        aux = words[v]
        removed = False
    else:
        aux = _CONTRACTIONS.get(tokens[v], tokens[v])
        removed = tokens[v] in _CONTRACTIONS

    subject = words[:v]
    tail_adverb = None
    if subject and tokens[v - 1] in _RELOCATABLE_ADVERBS:
        tail_adverb = words[v - 1]
        subject = subject[:-1]
    if not subject:
        yes, no = bind(False)
        return QuestionSpec(text=f"Is the following true: {cond}?",
                            yes_branch=yes, no_branch=no)

    rest_tokens = tokens[v + 1:]
    rest_words = words[v + 1:]
    if not hard_neg:
        keep = [k for k, t in enumerate(rest_tokens) if t not in _REMOVABLE_NEG]
        removed = removed or len(keep) != len(rest_tokens)
        rest_tokens = [rest_tokens[k] for k in keep]
        rest_words = [rest_words[k] for k in keep]
    negation_removed = bool(removed) and neg and not hard_neg

    # "have/has" as a main verb needs do-support; as a perfect auxiliary
    # (followed by a participle) it inverts directly.
    lead = aux
    if aux in ("have", "has") and not (rest_tokens and _looks_participle(rest_tokens[0])):
        lead = "do" if aux == "have" else "does"
        rest_words = [aux] + rest_words

    parts = [lead.capitalize(), _decap(subject[0]), *subject[1:], *rest_words]
    if tail_adverb:
        parts.append(tail_adverb)
    text = " ".join(w for w in parts if w).rstrip(" ,.;:") + "?"
    yes, no = bind(negation_removed)
    return QuestionSpec(text=text, yes_branch=yes, no_branch=no)


def generate_question(d: DecisionPoint) -> QuestionSpec:
    return question_for_split(d.split)


# --------------------------------------------------------------------------
# Flow graph
# --------------------------------------------------------------------------

@dataclass
class FlowNode:
    id: str
    kind: str  # "INSTRUCTION" | "DECISION"
    text: str
    question: Optional[str] = None
    yes_branch: Optional[Branch] = None
    provenance: Optional[tuple] = None  # (step, sentence, part); not exported


@dataclass
class FlowGraph:
    source_url: str
    source_path: tuple[int, ...]
    entry: Optional[str]
    nodes: list[FlowNode]
    edges: list[tuple[str, str, str]]  # (from, to, NEXT|TRUE|FALSE)

    def node(self, node_id: str) -> FlowNode:
        return next(n for n in self.nodes if n.id == node_id)

    def outgoing(self, node_id: str) -> dict[str, str]:
        return {label: dst for src, dst, label in self.edges if src == node_id}


def _validate_claims(blocks: Sequence[DecisionBlock]) -> None:
    claims = [(b, {m.position for m in b.members}) for b in blocks]
    for i, (b1, c1) in enumerate(claims):
        for b2, c2 in claims[i + 1:]:
            if not (c1 & c2):
                continue
            nested = b1.decision.position in c2 or b2.decision.position in c1
            if not nested:
                raise InconsistentBlocksError(
                    f"blocks at {b1.decision.position} and {b2.decision.position} "
                    f"both claim {sorted(c1 & c2)[:3]}")


class _Builder:
    def __init__(self, p: Procedure, blocks: Sequence[DecisionBlock]):
        self.p = p
        self.block_at = {b.decision.position: b for b in blocks}
        self.nodes: list[FlowNode] = []
        self.edges: list[tuple[str, str, str]] = []
        self.entry: Optional[str] = None

    def _new_node(self, kind: str, text: str, provenance: tuple,
                  question: Optional[QuestionSpec] = None) -> str:
        nid = f"n{len(self.nodes)}"
        self.nodes.append(FlowNode(
            id=nid, kind=kind, text=text,
            question=question.text if question else None,
            yes_branch=question.yes_branch if question else None,
            provenance=provenance))
        if self.entry is None:
            self.entry = nid
        return nid

    def _connect(self, stubs: list[tuple[str, str]], target: str) -> None:
        for src, label in stubs:
            self.edges.append((src, target, label))

    def render(self, units: list[tuple[int, int]],
               incoming: list[tuple[str, str]]) -> list[tuple[str, str]]:
        """Render a doc-order span; returns the dangling exit stubs."""
        stubs = incoming
        i = 0
        while i < len(units):
            pos = units[i]
            block = self.block_at.get(pos)
            if block is None:
                s = self.p.sentence_at(*pos)
                nid = self._new_node("INSTRUCTION", s.text, (*pos, "sentence"))
                self._connect(stubs, nid)
                stubs = [(nid, "NEXT")]
                i += 1
                continue

            split = block.decision.split
            nid = self._new_node("DECISION", split.condition, (*pos, "condition"),
                                 question=question_for_split(split))
            self._connect(stubs, nid)

            # Consume the member prefix available inside this span.
            rest = units[i + 1:]
            take = 0
            while take < len(block.members) and take < len(rest) and \
                    block.members[take].position == rest[take]:
                take += 1
            members = block.members[:take]
            true_units = [m.position for m in members if m.branch is Branch.TRUE]
            false_units = [m.position for m in members if m.branch is Branch.FALSE]

            eff = self._new_node("INSTRUCTION", split.effect, (*pos, "effect"))
            self.edges.append((nid, eff, "TRUE"))
            true_stubs = self.render(true_units, [(eff, "NEXT")])
            if false_units:
                false_stubs = self.render(false_units, [(nid, "FALSE")])
            else:
                false_stubs = [(nid, "FALSE")]
            stubs = true_stubs + false_stubs
            i += 1 + take
        return stubs


def build_flow_graph(p: Procedure, blocks: Sequence[DecisionBlock]) -> FlowGraph:
    """Linear NEXT chain over plain instructions; every decision becomes a
    DECISION node whose TRUE edge runs through its effect and TRUE-labeled
    members, with both branches rejoining at the first post-block node."""
    _validate_claims(blocks)
    units = [(step.index, qi)
             for step in p.steps for qi in range(len(step.sentences))]
    builder = _Builder(p, blocks)
    builder.render(units, [])
    return FlowGraph(source_url=p.doc_url, source_path=p.node_path,
                     entry=builder.entry, nodes=builder.nodes,
                     edges=builder.edges)


def mine_flow(p: Procedure, rules: BlockRules | None = None,
              lex: ImperativeLexicon | None = None) -> FlowGraph:
    """Full per-procedure mining: points, blocks, graph."""
    lex = lex or default_lexicon()
    points = extract_decision_points(p, lex)
    blocks = [extract_decision_block(p, d, rules, lex) for d in points]
    return build_flow_graph(p, blocks)


# --------------------------------------------------------------------------
# Export schema - the contract the walkthrough UI consumes
# --------------------------------------------------------------------------

def flow_to_dict(g: FlowGraph) -> dict:
    nodes = []
    for n in g.nodes:
        entry: dict = {"id": n.id, "kind": n.kind, "text": n.text}
        if n.question is not None:
            entry["question"] = n.question
            entry["yes_branch"] = n.yes_branch.value
        nodes.append(entry)
    return {
        "version": FLOW_SCHEMA_VERSION,
        "source": {"url": g.source_url, "node_path": list(g.source_path)},
        "entry": g.entry,
        "nodes": nodes,
        "edges": [{"from": a, "to": b, "label": label} for a, b, label in g.edges],
    }


def flow_to_json(g: FlowGraph) -> str:
    return json.dumps(flow_to_dict(g), indent=2, sort_keys=True) + "\n"


def flow_from_dict(d: dict) -> FlowGraph:
    if d.get("version") != FLOW_SCHEMA_VERSION:
        raise ValueError(f"unsupported flow schema version {d.get('version')!r}")
    nodes = [FlowNode(id=n["id"], kind=n["kind"], text=n["text"],
                      question=n.get("question"),
                      yes_branch=Branch(n["yes_branch"]) if "yes_branch" in n else None)
             for n in d["nodes"]]
    return FlowGraph(
        source_url=d["source"]["url"],
        source_path=tuple(d["source"]["node_path"]),
        entry=d["entry"],
        nodes=nodes,
        edges=[(e["from"], e["to"], e["label"]) for e in d["edges"]],
    )
