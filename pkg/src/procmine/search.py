"""Breadth-first procedure search over a scrubbed DOM.

List nodes are classified in discovery order; a positive, confident
classification claims the whole subtree, so nested lists inside a found
procedure are never classified on their own.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .classifier import Prediction, SvmModel, predict
from .errors import ModelMismatchError
from .features import FeatureConfig, Vocabulary, featurize, pipeline_fingerprint
from .ingest import (LIST_TAGS, Document, ListCandidate,
                     extract_list_candidates)
from .linguistics import ImperativeLexicon


@dataclass(frozen=True)
class SearchConfig:
    threshold: float = 0.5
    max_nodes: int = 50_000

    def __post_init__(self):
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError("threshold must lie in [0, 1]")


@dataclass
class ProcedureCandidate:
    candidate: ListCandidate
    prediction: Prediction


@dataclass
class SearchResult:
    procedures: list[ProcedureCandidate] = field(default_factory=list)
    truncated: bool = False
    lists_classified: int = 0
    nodes_visited: int = 0

    def __iter__(self):
        return iter(self.procedures)

    def __len__(self):
        return len(self.procedures)


def find_procedures(doc: Document, model: SvmModel, vocab: Vocabulary,
                    cfg: SearchConfig | None = None,
                    feat_cfg: FeatureConfig | None = None,
                    lex: ImperativeLexicon | None = None) -> SearchResult:
    """Classify list nodes breadth-first; stop descending at procedures."""
    cfg = cfg or SearchConfig()
    feat_cfg = feat_cfg or FeatureConfig()
    if model.vocab_fingerprint and \
            model.vocab_fingerprint != pipeline_fingerprint(vocab, feat_cfg):
        raise ModelMismatchError(
            "model was trained against a different vocabulary/feature layout")

    by_path = {c.node_path: c
               for c in extract_list_candidates(doc, k=feat_cfg.context_k)}
    result = SearchResult()
    queue = [doc.dom]
    while queue:
        if result.nodes_visited >= cfg.max_nodes:
            result.truncated = True
            break
        node = queue.pop(0)
        result.nodes_visited += 1
        if node.tag in LIST_TAGS and node.node_path in by_path:
            cand = by_path[node.node_path]
            pred = predict(model, featurize(cand, vocab, feat_cfg, lex))
            result.lists_classified += 1
            if pred.is_procedure and pred.confidence >= cfg.threshold:
                result.procedures.append(ProcedureCandidate(cand, pred))
                continue  # claimed subtree: children are not enqueued
        queue.extend(node.children)
    return result
