"""Annotation records, per-subtask evaluation, and a seeded synthetic
corpus generator.

The generator plants real signal, not just labels: procedures are ordered
lists of imperative steps with conditionals and decision blocks laid out
per the configured density; negatives echo the common non-procedure list
shapes on support sites (item lists, option lists, link lists). Ground
truth is emitted alongside, with node paths resolved against the scrubbed
DOM so generate -> ingest -> align is lossless.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .classifier import EvalReport, SvmModel, predict
from .errors import DanglingPathError, SchemaError
from .features import FeatureConfig, Vocabulary, featurize
from .flow import BlockRules, DecisionPoint, Procedure, extract_decision_block
from .ingest import (Document, ListCandidate, extract_list_candidates,
                     parse_document, scrub_template)
from .linguistics import ImperativeLexicon

ANNOTATION_SCHEMA_VERSION = 1


# --------------------------------------------------------------------------
# Annotation records
# --------------------------------------------------------------------------

@dataclass
class DecisionAnnotation:
    step_index: int
    sentence_index: int
    condition_text: str
    effect_text: str
    block_members: list[dict]  # {"step": int, "sentence": int, "branch": "TRUE"|"FALSE"}

    def member_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((m["step"], m["sentence"]) for m in self.block_members)


@dataclass
class AnnotationRecord:
    doc_path: str
    node_path: tuple[int, ...]
    is_procedure: bool
    decision_annotations: list[DecisionAnnotation] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "version": ANNOTATION_SCHEMA_VERSION,
            "doc_path": self.doc_path,
            "node_path": list(self.node_path),
            "is_procedure": self.is_procedure,
            "decision_annotations": [
                {"step_index": d.step_index, "sentence_index": d.sentence_index,
                 "condition_text": d.condition_text, "effect_text": d.effect_text,
                 "block_members": d.block_members}
                for d in self.decision_annotations
            ],
        }


def _record_from_dict(data: dict, line_no: int) -> AnnotationRecord:
    version = data.get("version")
    if version == ANNOTATION_SCHEMA_VERSION:
        try:
            return AnnotationRecord(
                doc_path=data["doc_path"],
                node_path=tuple(data["node_path"]),
                is_procedure=bool(data["is_procedure"]),
                decision_annotations=[
                    DecisionAnnotation(
                        step_index=int(d["step_index"]),
                        sentence_index=int(d["sentence_index"]),
                        condition_text=d["condition_text"],
                        effect_text=d["effect_text"],
                        block_members=list(d.get("block_members", [])),
                    )
                    for d in data.get("decision_annotations", [])
                ],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"line {line_no}: malformed record ({exc})") from exc
    if version is None:
        return _sniff_record(data, line_no)
    raise SchemaError(f"line {line_no}: unsupported annotation version {version!r}")


def _sniff_record(data: dict, line_no: int) -> AnnotationRecord:
    """Best-effort compatibility reader for unversioned/foreign records."""
    doc = data.get("doc_path") or data.get("doc") or data.get("url") or data.get("page")
    path = data.get("node_path") or data.get("path") or data.get("list_path")
    label = data.get("is_procedure")
    if label is None:
        label = data.get("procedure", data.get("label"))
    if isinstance(label, str):
        label = label.strip().lower() in ("1", "true", "yes", "procedure", "positive")
    if doc is None or path is None or label is None:
        raise SchemaError(f"line {line_no}: cannot infer record fields from {sorted(data)}")
    return AnnotationRecord(doc_path=str(doc), node_path=tuple(int(i) for i in path),
                            is_procedure=bool(label))


def load_annotations(path: Path | str,
                     docs_root: Path | str | None = None) -> list[AnnotationRecord]:
    """Read JSONL annotations; with ``docs_root`` set, every node_path must
    resolve inside its (scrubbed) document or the loader rejects the file."""
    records: list[AnnotationRecord] = []
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"line {line_no}: invalid JSON ({exc})") from exc
        records.append(_record_from_dict(data, line_no))
    if docs_root is not None:
        root = Path(docs_root)
        cache: dict[str, Document] = {}
        for i, rec in enumerate(records):
            if rec.doc_path not in cache:
                doc_file = root / rec.doc_path
                if not doc_file.exists():
                    raise DanglingPathError(
                        f"record {i}: document {rec.doc_path!r} not found")
                cache[rec.doc_path] = scrub_template(
                    parse_document(doc_file.read_bytes(), rec.doc_path))
            node = cache[rec.doc_path].find(rec.node_path)
            if node is None or node.tag not in ("ol", "ul"):
                raise DanglingPathError(
                    f"record {i}: node_path {list(rec.node_path)} does not "
                    f"resolve to a list in {rec.doc_path!r}")
    return records


def dump_annotations(records: Iterable[AnnotationRecord]) -> str:
    return "".join(json.dumps(r.to_dict(), sort_keys=True) + "\n" for r in records)


# --------------------------------------------------------------------------
# Evaluation
# --------------------------------------------------------------------------

def load_corpus_docs(docs_root: Path | str,
                     records: Sequence[AnnotationRecord]) -> dict[str, Document]:
    root = Path(docs_root)
    docs: dict[str, Document] = {}
    for rec in records:
        if rec.doc_path not in docs:
            raw = (root / rec.doc_path).read_bytes()
            docs[rec.doc_path] = scrub_template(parse_document(raw, rec.doc_path))
    return docs


def candidates_for_records(docs: dict[str, Document],
                           records: Sequence[AnnotationRecord],
                           context_k: int) -> list[ListCandidate]:
    by_doc: dict[str, dict[tuple[int, ...], ListCandidate]] = {}
    out: list[ListCandidate] = []
    for rec in records:
        if rec.doc_path not in by_doc:
            cands = extract_list_candidates(docs[rec.doc_path], k=context_k)
            by_doc[rec.doc_path] = {c.node_path: c for c in cands}
        cand = by_doc[rec.doc_path].get(rec.node_path)
        if cand is None:
            raise DanglingPathError(
                f"annotation path {list(rec.node_path)} missing from {rec.doc_path!r}")
        out.append(cand)
    return out


def evaluate_identification(model: SvmModel, vocab: Vocabulary,
                            records: Sequence[AnnotationRecord],
                            docs_root: Path | str,
                            feat_cfg: FeatureConfig | None = None,
                            lex: ImperativeLexicon | None = None) -> EvalReport:
    feat_cfg = feat_cfg or FeatureConfig()
    docs = load_corpus_docs(docs_root, records)
    cands = candidates_for_records(docs, records, feat_cfg.context_k)
    truth = [r.is_procedure for r in records]
    pred = [predict(model, featurize(c, vocab, feat_cfg, lex)).is_procedure
            for c in cands]
    return EvalReport.from_pairs(truth, pred)


ABLATION_ROWS: tuple[tuple[str, BlockRules], ...] = (
    ("baseline", BlockRules.baseline()),
    ("+note", BlockRules(note_rule=True, structure_rule=False, overlap_rule=False)),
    ("+note+overlap", BlockRules(note_rule=True, structure_rule=False, overlap_rule=True)),
    ("+note+overlap+structure", BlockRules(note_rule=True, structure_rule=True,
                                           overlap_rule=True)),
)


def block_accuracy(pairs: Sequence[tuple[frozenset, frozenset]]) -> float:
    """Exact member-set match; an empty extracted block matching an empty
    annotation counts as correct."""
    if not pairs:
        return 0.0
    return sum(1 for t, e in pairs if t == e) / len(pairs)


def evaluate_blocks(procedures: Sequence[tuple[Procedure, Sequence[DecisionAnnotation]]],
                    rules: BlockRules | None = None,
                    lex: ImperativeLexicon | None = None,
                    ablation: bool = True,
                    ) -> tuple[float, list[tuple[str, float]]]:
    """Block accuracy for the given rules plus the per-rule ablation table
    (baseline, +note, +note+overlap, +note+overlap+structure)."""
    def run(r: BlockRules) -> float:
        pairs = []
        for proc, annotations in procedures:
            for ann in annotations:
                d = _decision_point_at(proc, ann, lex)
                if d is None:
                    pairs.append((ann.member_set(), frozenset({("MISSED",)})))
                    continue
                block = extract_decision_block(proc, d, r, lex)
                pairs.append((ann.member_set(),
                              frozenset(m.position for m in block.members)))
        return block_accuracy(pairs)

    main = run(rules or BlockRules())
    table = [(label, run(r)) for label, r in ABLATION_ROWS] if ablation else []
    return main, table


def _decision_point_at(proc: Procedure, ann: DecisionAnnotation,
                       lex: ImperativeLexicon | None) -> Optional[DecisionPoint]:
    from .linguistics import detect_conditional
    if ann.step_index >= len(proc.steps):
        return None
    step = proc.steps[ann.step_index]
    if ann.sentence_index >= len(step.sentences):
        return None
    split = detect_conditional(step.sentences[ann.sentence_index], lex)
    if split is None:
        return None
    return DecisionPoint(ann.step_index, ann.sentence_index, split)


# --------------------------------------------------------------------------
# Synthetic corpus generation
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusSpec:
    seed: int = 7
    n_docs: int = 50
    procedure_ratio: float = 0.43
    decision_density: float = 0.35
    noise_kinds: tuple[str, ...] = ("items", "options", "links")

    def __post_init__(self):
        if not 0.0 <= self.procedure_ratio <= 1.0:
            raise ValueError("procedure_ratio must lie in [0, 1]")
        if not 0.0 <= self.decision_density <= 1.0:
            raise ValueError("decision_density must lie in [0, 1]")


@dataclass
class GeneratedCorpus:
    spec: CorpusSpec
    files: dict[str, bytes]
    records: list[AnnotationRecord]

    @property
    def manifest(self) -> dict:
        return {
            "seed": self.spec.seed,
            "spec": {"n_docs": self.spec.n_docs,
                     "procedure_ratio": self.spec.procedure_ratio,
                     "decision_density": self.spec.decision_density,
                     "noise_kinds": list(self.spec.noise_kinds)},
            "files": sorted(self.files),
        }

    def write(self, outdir: Path | str) -> None:
        out = Path(outdir)
        out.mkdir(parents=True, exist_ok=True)
        for name, blob in self.files.items():
            (out / name).write_bytes(blob)
        (out / "annotations.jsonl").write_text(dump_annotations(self.records),
                                               encoding="utf-8")
        (out / "manifest.json").write_text(
            json.dumps(self.manifest, indent=2, sort_keys=True) + "\n",
            encoding="utf-8")


# Step/condition text is built compositionally from the pools below so
# the corpus carries tens of thousands of distinct sentences; a bag of
# words cannot memorize its way around the formatting signal.
_VERBS = ["restart", "open", "close", "press", "remove", "replace", "check",
          "verify", "connect", "disconnect", "install", "download", "select",
          "click", "enable", "disable", "update", "inspect", "clean",
          "unplug", "insert", "copy", "save", "review", "record", "confirm",
          "adjust", "align", "attach", "calibrate", "configure", "detach",
          "eject", "empty", "lock", "unlock", "loosen", "tighten", "lower",
          "raise", "mount", "move", "pull", "push", "release", "rename",
          "reset", "scan", "secure", "slide", "store", "swap", "switch",
          "test", "turn", "wipe", "reconnect", "examine", "rotate"]
_ADJECTIVES = ["", "", "", "front", "rear", "left", "right", "upper",
               "lower", "primary", "secondary", "spare", "main", "internal",
               "external", "network", "power", "system", "status", "second"]
_NOUNS = ["server", "router", "printer", "switch", "panel", "tray", "cover",
          "door", "cable", "cord", "module", "card", "drive", "fan",
          "filter", "sensor", "battery", "charger", "adapter", "bracket",
          "latch", "port", "socket", "display", "monitor", "keyboard",
          "scanner", "camera", "speaker", "controller", "gateway", "modem",
          "hub", "rack", "shelf", "unit", "console", "terminal", "agent",
          "service", "client", "manager", "queue", "index", "log",
          "profile", "account", "license", "certificate", "firmware",
          "driver", "package", "update", "backup", "archive", "report",
          "dashboard", "handle", "button", "screen"]
_TAILS = ["", "", "", " again", " carefully", " on the back side",
          " behind the cover", " from the menu", " in the admin console",
          " before you continue", " after the restart", " at the rear panel",
          " with a soft cloth", " until the light turns green",
          " on both sides", " for a few seconds", " from the list",
          " during the next window", " on the status screen"]
_STATES = ["is red", "is yellow", "is green", "is dark", "is open",
           "is blocked", "is missing", "is failed", "is loose", "is warm",
           "is empty", "is full", "is offline", "is online",
           "does not start", "does not respond", "does not open",
           "is not lit", "is not detected", "stays offline",
           "reports an error", "shows a warning", "keeps turning off",
           "fails again", "looks damaged", "remains dark"]
# (state, alternative state) pairs used for parallel next-step twins.
_TWIN_STATES = [("is missing", "is failed"), ("is red", "is yellow"),
                ("is open", "is blocked"), ("does not start",
                                            "does not respond"),
                ("is dark", "is not detected")]
_NOTES = ["Note: this action clears the saved settings.",
          "Note: the service stays offline during this step.",
          "Note: older models use a different layout.",
          "Important: keep the cover panel closed.",
          "Important: never force the latch.",
          "Tip: a second person makes this step easier.",
          "Tip: a photo of the wiring helps later."]
_ITEM_NOUNS = ["two power cables", "one mounting bracket", "the printed guide",
               "a screw kit", "four rubber feet", "the warranty card",
               "one network cable", "a cleaning cloth", "the label sheet",
               "two spare filters", "a replacement latch", "three clips",
               "the quick start sheet", "a small brush", "two side rails"]
_LINK_TEXTS = ["Driver downloads", "Warranty information", "Contact support",
               "Release notes", "Product manuals", "Community forum",
               "Service status", "Spare parts store", "Training videos",
               "Billing portal", "Return policy", "Accessory catalog"]

_POS_INTROS = [
    "Complete the following steps to {goal}:",
    "Use the following procedure to {goal}.",
    "Follow these steps to {goal}:",
    "To {goal}, perform the steps below.",
    "This procedure explains how to {goal}.",
    "Do the following to {goal}:",
]
_BLAND_INTROS = [
    "Additional information is provided below.",
    "The following section applies to all models.",
    "Review this page before you continue.",
    "The details below cover the current release.",
    "This section was updated last month.",
]
_NEG_INTROS = {
    "items": ["The package includes the following items:",
              "The box contains the following parts:",
              "These items are required for the installation:",
              "Check that the following parts are present:"],
    "options": ["You can try the following options to resolve the issue:",
                "The following actions are available:",
                "Consider one of the following alternatives:",
                # Possible-action lists read like procedures on purpose;
                # they are the hard negatives of this corpus.
                "Try the following steps to resolve the issue:",
                "Any of the following steps may clear the error:",
                "One of the following may help to {goal}:"],
    "links": ["See the following resources:",
              "The following pages provide more information:",
              "Related links are listed below:"],
}


def _noun_phrase(rng: random.Random) -> str:
    adj = rng.choice(_ADJECTIVES)
    noun = rng.choice(_NOUNS)
    return f"the {adj} {noun}" if adj else f"the {noun}"


def _condition_text(rng: random.Random, state: str | None = None) -> str:
    return f"{_noun_phrase(rng)} {state or rng.choice(_STATES)}"


def _goal_text(rng: random.Random) -> str:
    return f"{rng.choice(_VERBS)} {_noun_phrase(rng)}"


def _fresh_condition(rng: random.Random, used: list[str],
                     ceiling: float = 0.6) -> str:
    """A condition dissimilar to every planted one in this list, so only
    deliberate twins trip the overlap/parallel thresholds."""
    from .linguistics import similarity
    for _ in range(25):
        cand = _condition_text(rng)
        if all(similarity(cand, u) < ceiling for u in used):
            used.append(cand)
            return cand
    used.append(cand)
    return cand

# Member counts per non-empty block; tuned so the corpus-wide mean over
# all non-empty blocks (including the small absorbed/else ones) lands
# near the 2.36 target.
_MEMBER_SIZES = (1, 2, 3, 4, 5)
_MEMBER_WEIGHTS = (0.26, 0.31, 0.22, 0.13, 0.08)


def _esc(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;"))


class _ListPlan:
    """One generated list: markup plus its ground-truth annotation."""

    def __init__(self, marker: str, tag: str, intro: str, positive: bool):
        self.marker = marker
        self.tag = tag
        self.intro = intro
        self.positive = positive
        self.items_html: list[str] = []
        self.decisions: list[DecisionAnnotation] = []

    def html(self) -> str:
        body = "\n".join(f"  <li>{item}</li>" for item in self.items_html)
        return f'<{self.tag} id="{self.marker}">\n{body}\n</{self.tag}>'


def _imperative_sentence(rng: random.Random) -> str:
    verb = rng.choice(_VERBS)
    return f"{verb.capitalize()} {_noun_phrase(rng)}{rng.choice(_TAILS)}."


def _make_decision_step(rng: random.Random, step_index: int,
                        plan: _ListPlan, density_roll: str,
                        cond: str) -> str:
    """Build a conditional step's <li> HTML and record its annotation."""
    effect = _imperative_sentence(rng)[:-1].lower()
    first = f"If {cond}, {effect}."
    sentences = [first]
    members: list[dict] = []
    extra_html = ""

    if density_roll == "empty":
        pass
    else:
        size = rng.choices(_MEMBER_SIZES, weights=_MEMBER_WEIGHTS)[0]
        for k in range(size):
            sentences.append(_imperative_sentence(rng))
            members.append({"step": step_index, "sentence": 1 + k, "branch": "TRUE"})
        if density_roll == "note":
            sentences.append(rng.choice(_NOTES))
        elif density_roll == "paragraph":
            extra_html = f"\n    <p>{_esc(_imperative_sentence(rng))}</p>"
        elif density_roll == "else":
            alt = _imperative_sentence(rng)[:-1].lower()
            sentences.append(f"Otherwise, {alt}.")
            members.append({"step": step_index, "sentence": len(sentences) - 1,
                            "branch": "FALSE"})

    plan.decisions.append(DecisionAnnotation(
        step_index=step_index, sentence_index=0,
        condition_text=cond, effect_text=effect, block_members=members))
    return " ".join(_esc(s) for s in sentences) + extra_html


def _make_overlap_steps(rng: random.Random, step_index: int,
                        plan: _ListPlan, cond: str, twin: str) -> tuple[str, str]:
    """A decision step whose parallel twin opens the next step (R-C)."""
    eff1 = _imperative_sentence(rng)[:-1].lower()
    eff2 = _imperative_sentence(rng)[:-1].lower()
    follow = _imperative_sentence(rng)

    next_sentences = [f"If {twin}, {eff2}.", follow]
    members = [{"step": step_index + 1, "sentence": i, "branch": "FALSE"}
               for i in range(len(next_sentences))]
    plan.decisions.append(DecisionAnnotation(
        step_index=step_index, sentence_index=0,
        condition_text=cond, effect_text=eff1, block_members=members))
    plan.decisions.append(DecisionAnnotation(
        step_index=step_index + 1, sentence_index=0,
        condition_text=twin, effect_text=eff2,
        block_members=[{"step": step_index + 1, "sentence": 1, "branch": "TRUE"}]))
    return (_esc(f"If {cond}, {eff1}."),
            " ".join(_esc(s) for s in next_sentences))


def _positive_list(rng: random.Random, marker: str, spec: CorpusSpec) -> _ListPlan:
    ordered = rng.random() < 0.93
    if ordered:
        # Ordered procedures carry the ambiguous contexts: often bland or
        # even option-flavored, so formatting is what disambiguates them.
        roll = rng.random()
        if roll < 0.40:
            intro_pool = _POS_INTROS
        elif roll < 0.75:
            intro_pool = _BLAND_INTROS
        else:
            intro_pool = _NEG_INTROS["options"]
    else:
        intro_pool = _POS_INTROS
    intro = rng.choice(intro_pool).format(goal=_goal_text(rng))
    plan = _ListPlan(marker, "ol" if ordered else "ul", intro, positive=True)

    # Planted conditions are kept pairwise dissimilar within a list so
    # only the deliberate twins trip the overlap/parallel thresholds.
    used_conditions: list[str] = []

    n_steps = rng.randint(3, 8)
    step = 0
    while step < n_steps:
        if rng.random() < spec.decision_density:
            roll = rng.choices(
                ["empty", "plain", "note", "paragraph", "else", "overlap"],
                weights=[0.40, 0.25, 0.10, 0.10, 0.07, 0.08])[0]
            if roll == "overlap" and step + 1 < n_steps:
                state_a, state_b = rng.choice(_TWIN_STATES)
                np = _noun_phrase(rng)
                cond, twin = f"{np} {state_a}", f"{np} {state_b}"
                used_conditions.extend([cond, twin])
                first, second = _make_overlap_steps(rng, step, plan, cond, twin)
                plan.items_html.append(first)
                plan.items_html.append(second)
                step += 2
                continue
            if roll == "overlap":
                roll = "plain"
            cond = _fresh_condition(rng, used_conditions)
            plan.items_html.append(
                _make_decision_step(rng, step, plan, roll, cond))
        else:
            n_sents = rng.choices([1, 2], weights=[0.85, 0.15])[0]
            plan.items_html.append(
                " ".join(_esc(_imperative_sentence(rng)) for _ in range(n_sents)))
        step += 1
    return plan


def _pick_noise_kind(rng: random.Random, kinds: tuple[str, ...]) -> str:
    # Option lists are the paper's hard negatives; over-represent them.
    if "options" in kinds and rng.random() < 0.5:
        return "options"
    rest = [k for k in kinds if k != "options"] or list(kinds)
    return rng.choice(rest)


def _negative_list(rng: random.Random, marker: str, kind: str) -> _ListPlan:
    ordered = rng.random() < 0.04
    if kind == "options" and not ordered:
        roll = rng.random()
        if roll < 0.55:
            intro_pool = _NEG_INTROS[kind]
        elif roll < 0.80:
            intro_pool = _POS_INTROS
        else:
            intro_pool = _BLAND_INTROS
    else:
        intro_pool = _NEG_INTROS[kind] if rng.random() < 0.85 else _BLAND_INTROS
    intro = rng.choice(intro_pool).format(goal=_goal_text(rng))
    plan = _ListPlan(marker, "ol" if ordered else "ul", intro, positive=False)
    n = rng.randint(3, 7)
    if kind == "items":
        rows = [f"{rng.choice(_ITEM_NOUNS).capitalize()}." for _ in range(n)]
    elif kind == "links":
        rows = [f'<a href="/p/{i}">{_esc(rng.choice(_LINK_TEXTS))}</a>'
                for i in range(n)]
    else:
        # Options: alternatives written exactly like procedure steps
        # (including conditional phrasing), so only formatting and
        # context can tell them apart.
        rows = []
        for _ in range(n):
            if rng.random() < 0.3:
                eff = _imperative_sentence(rng)[:-1].lower()
                rows.append(_esc(f"If {_condition_text(rng)}, {eff}."))
            else:
                rows.append(_esc(_imperative_sentence(rng)))
    plan.items_html.extend(rows)
    return plan


_PAGE_TEMPLATE = """<!DOCTYPE html>
<html>
<head><title>{title}</title></head>
<body>
<header><div class="masthead">Support Center</div></header>
<nav class="navigation"><ul><li><a href="/">Home</a></li><li><a href="/docs">Docs</a></li><li><a href="/contact">Contact</a></li></ul></nav>
<main>
<h1>{title}</h1>
<p>{lede}</p>
{sections}
</main>
<aside class="sidebar"><ul><li><a href="/a">Popular articles</a></li><li><a href="/b">Maintenance windows</a></li></ul></aside>
<footer><p>Generated support fixture.</p></footer>
</body>
</html>
"""


def generate_corpus(spec: CorpusSpec) -> GeneratedCorpus:
    """Deterministic synthetic corpus; identical spec => identical bytes."""
    rng = random.Random(spec.seed)
    files: dict[str, bytes] = {}
    records: list[AnnotationRecord] = []
    marker_n = 0

    for doc_i in range(spec.n_docs):
        plans: list[_ListPlan] = []
        n_lists = rng.randint(3, 5)
        for _ in range(n_lists):
            marker_n += 1
            marker = f"L{marker_n}"
            if rng.random() < spec.procedure_ratio:
                plans.append(_positive_list(rng, marker, spec))
            else:
                kind = _pick_noise_kind(rng, spec.noise_kinds)
                plans.append(_negative_list(rng, marker, kind))

        sections: list[str] = []
        wrapped: dict[str, str] = {}
        for plan in plans:
            block = f"<p>{_esc(plan.intro)}</p>\n{plan.html()}"
            if plan.positive and rng.random() < 0.12:
                # Layout list wrapping a real procedure (search must descend).
                marker_n += 1
                outer = f"L{marker_n}"
                block = (f"<p>{_esc(rng.choice(_BLAND_INTROS))}</p>\n"
                         f'<ul id="{outer}">\n  <li>Overview of the task.</li>\n'
                         f"  <li>{block}</li>\n</ul>")
                wrapped[outer] = plan.marker
            sections.append(block)

        title = f"Support article {doc_i:03d}"
        lede = rng.choice([
            "This page describes common maintenance tasks.",
            "Use this page when the device reports a problem.",
            "The notes below apply to the current release.",
        ])
        html = _PAGE_TEMPLATE.format(title=title, lede=lede,
                                     sections="\n".join(sections))
        name = f"doc_{doc_i:04d}.html"
        files[name] = html.encode("utf-8")

        doc = scrub_template(parse_document(files[name], name))
        paths: dict[str, tuple[int, ...]] = {}
        for node in doc.dom.walk():
            if node.tag in ("ol", "ul") and node.attrs.get("id", "").startswith("L"):
                paths[node.attrs["id"]] = node.node_path
        for plan in plans:
            records.append(AnnotationRecord(
                doc_path=name, node_path=paths[plan.marker],
                is_procedure=plan.positive,
                decision_annotations=plan.decisions))
        for outer_marker in wrapped:
            records.append(AnnotationRecord(
                doc_path=name, node_path=paths[outer_marker],
                is_procedure=False))

    return GeneratedCorpus(spec=spec, files=files, records=records)
