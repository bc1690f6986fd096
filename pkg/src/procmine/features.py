"""Sparse feature extraction for list candidates.

Text features are tf-idf n-grams over the candidate's context sentences
plus the whole list text, filtered through a common-English wordlist so
site-specific vocabulary cannot leak into the model. Formatting and
imperative statistics are appended after the (L2-normalized) text block.
"""
from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import EmptyVocabError
from .ingest import ListCandidate, ListKind
from .linguistics import ImperativeLexicon, default_lexicon, detect_imperatives

VOCAB_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class FeatureConfig:
    ngram_max: int = 1
    context_k: int = 1
    use_list_type: bool = True
    use_imperatives: bool = True

    def __post_init__(self):
        if self.ngram_max not in (1, 2, 3):
            raise ValueError("ngram_max must be 1..3")
        if not 1 <= self.context_k <= 4:
            raise ValueError("context_k must be 1..4")

    @property
    def meta_size(self) -> int:
        return (1 if self.use_list_type else 0) + (3 if self.use_imperatives else 0)


@dataclass
class Vocabulary:
    term_to_index: dict[str, int]
    idf: list[float]
    ngram_max: int
    frequency_wordlist: frozenset[str]

    def __len__(self) -> int:
        return len(self.term_to_index)

    def to_json(self) -> str:
        terms = [t for t, _ in sorted(self.term_to_index.items(), key=lambda kv: kv[1])]
        return json.dumps(
            {"version": VOCAB_SCHEMA_VERSION, "ngram_max": self.ngram_max,
             "terms": terms, "idf": self.idf},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str, wordlist: frozenset[str] | None = None) -> "Vocabulary":
        data = json.loads(text)
        if data.get("version") != VOCAB_SCHEMA_VERSION:
            raise ValueError(f"unsupported vocabulary version {data.get('version')!r}")
        terms = data["terms"]
        if wordlist is None:
            wordlist = frozenset(t for t in terms if " " not in t)
        return cls(
            term_to_index={t: i for i, t in enumerate(terms)},
            idf=[float(x) for x in data["idf"]],
            ngram_max=int(data["ngram_max"]),
            frequency_wordlist=wordlist,
        )

    def fingerprint(self) -> str:
        return hashlib.sha256(self.to_json().encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class FeatureVector:
    entries: tuple[tuple[int, float], ...]
    meta_offset: int

    def max_index(self) -> int:
        return self.entries[-1][0] if self.entries else -1


@lru_cache(maxsize=1)
def default_wordlist() -> frozenset[str]:
    text = resources.files("procmine.data").joinpath("wordlist10k.txt").read_text(encoding="utf-8")
    return frozenset(
        line.split("#", 1)[0].strip().lower()
        for line in text.splitlines()
        if line.split("#", 1)[0].strip()
    )


def candidate_tokens(cand: ListCandidate, cfg: FeatureConfig) -> list[str]:
    """Concatenated context (last k sentences) + whole list text tokens."""
    toks: list[str] = []
    for s in cand.context[-cfg.context_k:]:
        toks.extend(s.tokens)
    for item in cand.items:
        for s in item.sentences:
            toks.extend(s.tokens)
    return toks


def _ngrams(tokens: list[str], nmax: int, wordlist: frozenset[str]):
    keep = [t in wordlist for t in tokens]
    for n in range(1, nmax + 1):
        for i in range(len(tokens) - n + 1):
            if all(keep[i:i + n]):
                yield " ".join(tokens[i:i + n])


def build_vocabulary(candidates: list[ListCandidate], cfg: FeatureConfig,
                     wordlist: frozenset[str] | None = None) -> Vocabulary:
    """Document-frequency vocabulary over the training candidates.

    Unigrams outside the wordlist are dropped, and any n-gram containing
    a dropped unigram goes with them. idf = ln((1+N)/(1+df)) + 1.
    """
    wordlist = wordlist or default_wordlist()
    if not candidates:
        raise EmptyVocabError("no training candidates")
    df: dict[str, int] = {}
    for cand in candidates:
        seen = set(_ngrams(candidate_tokens(cand, cfg), cfg.ngram_max, wordlist))
        for term in seen:
            df[term] = df.get(term, 0) + 1
    if not df:
        raise EmptyVocabError("no terms survive the wordlist filter")
    terms = sorted(df)
    n = len(candidates)
    return Vocabulary(
        term_to_index={t: i for i, t in enumerate(terms)},
        idf=[math.log((1 + n) / (1 + df[t])) + 1.0 for t in terms],
        ngram_max=cfg.ngram_max,
        frequency_wordlist=wordlist,
    )


def imperative_features(cand: ListCandidate,
                        lex: ImperativeLexicon | None = None) -> tuple[float, float, float]:
    """(sentences with an imperative, sentences starting with one,
    imperatives per token) over the list text, each in [0, 1]."""
    lex = lex or default_lexicon()
    sentences = cand.item_sentences
    if not sentences:
        return (0.0, 0.0, 0.0)
    with_imp = 0
    start_imp = 0
    n_imp = 0
    n_tok = 0
    for s in sentences:
        anns = detect_imperatives(s, lex)
        n_imp += len(anns)
        n_tok += len(s.tokens)
        if anns:
            with_imp += 1
        if any(a.token_index == 0 for a in anns):
            start_imp += 1
    density = min(1.0, n_imp / n_tok) if n_tok else 0.0
    return (with_imp / len(sentences), start_imp / len(sentences), density)


def featurize(cand: ListCandidate, vocab: Vocabulary, cfg: FeatureConfig,
              lex: ImperativeLexicon | None = None) -> FeatureVector:
    """tf-idf text block (L2-normalized), then list-type and imperative
    features; out-of-vocabulary terms are ignored."""
    counts: dict[int, int] = {}
    for term in _ngrams(candidate_tokens(cand, cfg), vocab.ngram_max,
                        vocab.frequency_wordlist):
        idx = vocab.term_to_index.get(term)
        if idx is not None:
            counts[idx] = counts.get(idx, 0) + 1
    weights = {i: c * vocab.idf[i] for i, c in counts.items()}
    norm = math.sqrt(sum(w * w for w in weights.values()))
    if norm > 0:
        weights = {i: w / norm for i, w in weights.items()}

    meta_offset = len(vocab)
    entries = sorted(weights.items())
    cursor = meta_offset
    if cfg.use_list_type:
        if cand.list_kind is ListKind.ORDERED:
            entries.append((cursor, 1.0))
        cursor += 1
    if cfg.use_imperatives:
        for j, value in enumerate(imperative_features(cand, lex)):
            if value != 0.0:
                entries.append((cursor + j, value))
        cursor += 3
    return FeatureVector(entries=tuple(entries), meta_offset=meta_offset)


def feature_dim(vocab: Vocabulary, cfg: FeatureConfig) -> int:
    return len(vocab) + cfg.meta_size


def pipeline_fingerprint(vocab: Vocabulary, cfg: FeatureConfig) -> str:
    """Identifies the (vocabulary, feature layout) pair a model was
    trained against."""
    payload = vocab.to_json() + json.dumps(
        {"ngram_max": cfg.ngram_max, "context_k": cfg.context_k,
         "use_list_type": cfg.use_list_type,
         "use_imperatives": cfg.use_imperatives},
        sort_keys=True)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def read_wordlist_file(path: Path | str) -> frozenset[str]:
    text = Path(path).read_text(encoding="utf-8")
    return frozenset(
        line.split("#", 1)[0].strip().lower()
        for line in text.splitlines()
        if line.split("#", 1)[0].strip()
    )
