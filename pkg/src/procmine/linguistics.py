"""Sentence-level analyses used throughout the pipeline.

Imperative and conditional detection are positional lexicon rules, not a
parse: a shipped base-verb lexicon plus guards on subjects, auxiliaries,
and clause position. The rules accept a known noise floor on complex
sentences; the lexicon is user-extensible for domain verbs.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional

from .errors import MalformedClauseError
from .ingest import Sentence, token_spans, tokenize

log = logging.getLogger(__name__)

SUBJECT_PRONOUNS = frozenset(
    {"you", "we", "i", "they", "he", "she", "it", "everyone", "someone",
     "anybody", "anyone"}
)
DETERMINERS = frozenset(
    {"the", "a", "an", "this", "that", "these", "those", "your", "our",
     "its", "their", "my", "his", "her", "each", "every", "all", "some",
     "any", "both", "most", "another"}
)
AUXILIARIES = frozenset(
    {"is", "are", "was", "were", "has", "have", "had", "will", "would",
     "can", "could", "may", "might", "must", "should", "shall", "does",
     "do", "did", "cannot"}
)
# Leading adverbs/openers an imperative may follow.
LEADING_ADVERBS = frozenset(
    {"then", "first", "next", "also", "now", "finally", "please", "simply",
     "just", "second", "third", "lastly", "afterwards", "alternatively",
     "otherwise", "else", "instead", "carefully", "gently"}
)
INTERROGATIVES = frozenset(
    {"what", "why", "how", "where", "which", "who", "whom", "whose"}
)
# Verbs taking if/when complements ("Check if the light is blinking").
COMPLEMENT_VERBS = frozenset(
    {"check", "checks", "checked", "checking", "see", "sees", "saw",
     "seeing", "seen", "determine", "determines", "determined",
     "determining", "verify", "verifies", "verified", "verifying", "know",
     "knows", "knew", "knowing", "known", "ask", "asks", "asked", "asking",
     "wonder", "wonders", "wondered", "wondering"}
)
NEGATION_TOKENS = frozenset(
    {"not", "no", "never", "cannot", "n't", "without", "unable", "fails",
     "fail"}
)
# Conjunctions that split coordinate clauses for effect narrowing.
CLAUSE_CONJUNCTIONS = frozenset({"but", "and", "or", "so", "then", "however"})

# Finite-verb hints for subject+verb main-clause plausibility.
FINITE_HINTS = AUXILIARIES | frozenset(
    {"appears", "remains", "indicates", "means", "shows", "displays",
     "continues", "occurs", "persists", "starts", "stops", "reports",
     "returns", "becomes", "needs", "requires", "contains", "fails"}
)


class Polarity(Enum):
    DIRECT = "DIRECT"
    INVERTED = "INVERTED"


class Trigger(Enum):
    IF = "if"
    WHEN = "when"
    UNLESS = "unless"


TRIGGER_WORDS = {t.value: t for t in Trigger}


@dataclass(frozen=True)
class ImperativeAnnotation:
    verb: str
    token_index: int


@dataclass(frozen=True)
class ConditionalSplit:
    trigger: Trigger
    trigger_index: int
    condition: str
    effect: str
    polarity: Polarity
    condition_negated: bool


@dataclass(frozen=True)
class ImperativeLexicon:
    verbs: frozenset[str]
    domain_verbs: frozenset[str] = frozenset()

    def __contains__(self, token: str) -> bool:
        return token in self.verbs or token in self.domain_verbs

    def extended(self, extra: Iterable[str]) -> "ImperativeLexicon":
        return ImperativeLexicon(
            verbs=self.verbs,
            domain_verbs=self.domain_verbs | {w.strip().lower() for w in extra if w.strip()},
        )


def read_wordlist(path: Path | str) -> frozenset[str]:
    """One lowercase entry per line; '#' starts a comment."""
    out = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip().lower()
        if line:
            out.add(line)
    return frozenset(out)


def _data_text(name: str) -> str:
    return resources.files("procmine.data").joinpath(name).read_text(encoding="utf-8")


def _parse_wordlist(text: str) -> frozenset[str]:
    out = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip().lower()
        if line:
            out.add(line)
    return frozenset(out)


@lru_cache(maxsize=1)
def default_lexicon() -> ImperativeLexicon:
    return ImperativeLexicon(
        verbs=_parse_wordlist(_data_text("verbs.txt")),
        domain_verbs=_parse_wordlist(_data_text("domain_verbs.txt")),
    )


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    return _parse_wordlist(_data_text("stopwords.txt"))


# --------------------------------------------------------------------------
# Imperatives
# --------------------------------------------------------------------------

def _comma_between(text: str, spans, i: int) -> bool:
    """True when a clause separator sits between token i and token i+1."""
    if i + 1 >= len(spans):
        return False
    gap = text[spans[i][2]:spans[i + 1][1]]
    return any(ch in gap for ch in ",;:")


def _spans(s: Sentence):
    return [(tok, start, end) for tok, start, end in token_spans(s.text)]


def _effective_start(tokens: list[str], text: str, spans, lex: ImperativeLexicon) -> Optional[int]:
    """Index where an R1 imperative may sit, skipping leading adverbs,
    fronted "To <verb> ...," purpose clauses, and fronted conditionals."""
    i = 0
    for _ in range(3):
        while i < len(tokens) and tokens[i] in LEADING_ADVERBS:
            i += 1
        if i >= len(tokens):
            return None
        if tokens[i] == "to" and i + 1 < len(tokens) and tokens[i + 1] in lex:
            j = next((k for k in range(i + 1, len(tokens) - 1)
                      if _comma_between(text, spans, k)), None)
            if j is None:
                return None
            i = j + 1
            continue
        if tokens[i] in TRIGGER_WORDS:
            j = next((k for k in range(i + 1, len(tokens) - 1)
                      if _comma_between(text, spans, k)), None)
            if j is None:
                return None
            i = j + 1
            continue
        break
    return i if i < len(tokens) else None


def detect_imperatives(s: Sentence, lex: ImperativeLexicon | None = None) -> list[ImperativeAnnotation]:
    """Imperative verbs by position rules.

    R1: the sentence-initial content token (after leading adverbs or a
    fronted purpose/conditional clause) is a lexicon verb, not blocked by
    a subject pronoun/determiner or a following auxiliary.
    R2: lexicon verbs right after "and"/"or"/"then" once the left
    conjunct is already imperative.
    """
    lex = lex or default_lexicon()
    tokens = list(s.tokens)
    if not tokens:
        return []
    spans = _spans(s)
    if len(spans) != len(tokens):
        tokens = [t for t, _, _ in spans]
    found: list[ImperativeAnnotation] = []

    eff = _effective_start(tokens, s.text, spans, lex)
    if eff is not None:
        t = tokens[eff]
        blocked = (t in SUBJECT_PRONOUNS or t in DETERMINERS
                   or (eff + 1 < len(tokens) and tokens[eff + 1] in AUXILIARIES))
        if not blocked and t in lex:
            found.append(ImperativeAnnotation(verb=t, token_index=eff))

    start = (eff if eff is not None else 0) + 1
    for j in range(start, len(tokens)):
        if not found:
            break
        if tokens[j] in lex and tokens[j - 1] in ("and", "or", "then"):
            if j + 1 < len(tokens) and tokens[j + 1] in AUXILIARIES:
                continue
            found.append(ImperativeAnnotation(verb=tokens[j], token_index=j))
    return found


# --------------------------------------------------------------------------
# Conditionals
# --------------------------------------------------------------------------

def detect_negation(condition: str) -> bool:
    toks = tokenize(condition)
    return any(t in NEGATION_TOKENS or t.endswith("n't") for t in toks)


def _strip_edges(text: str) -> str:
    return text.strip().strip(",.;: ").strip()


def _plausible_main_clause(tokens: list[str], i: int, lex: ImperativeLexicon) -> bool:
    """Could a main clause start at token i? (imperative or subject+verb)"""
    while i < len(tokens) and tokens[i] in (LEADING_ADVERBS | {"and", "or", "so"}):
        i += 1
    if i >= len(tokens):
        return False
    t = tokens[i]
    if t in lex and not (i + 1 < len(tokens) and tokens[i + 1] in AUXILIARIES):
        return True
    if t in SUBJECT_PRONOUNS:
        return True
    if t in DETERMINERS:
        for la in tokens[i + 1:i + 6]:
            if la in FINITE_HINTS:
                return True
            if la.endswith("s") and (la[:-1] in lex or la[:-2] in lex):
                return True
    return False


def _substantive_prefix(tokens: list[str], ti: int, lex: ImperativeLexicon) -> bool:
    prefix = [t for t in tokens[:ti] if t not in ("and", "or", "but", "then")]
    if not prefix:
        return False
    if any(t in lex for t in prefix):
        return True
    return len(prefix) >= 2


def split_condition_effect(s: Sentence, trigger_index: int,
                           lex: ImperativeLexicon | None = None) -> tuple[str, str]:
    """Split a conditional sentence at the trigger into condition/effect.

    The condition runs from the trigger to the first comma followed by a
    plausible main clause (or the sentence end for trailing conditionals).
    The effect is the governing clause only: for "X but Y if C" forms the
    nearest preceding clause after the last clause conjunction.
    """
    lex = lex or default_lexicon()
    text = s.text
    spans = _spans(s)
    tokens = [t for t, _, _ in spans]
    ti = trigger_index
    if ti >= len(tokens):
        raise MalformedClauseError("trigger index out of range")
    n = len(tokens)

    cond_end = n - 1
    boundary_j: Optional[int] = None
    for j in range(ti + 1, n - 1):
        if _comma_between(text, spans, j) and _plausible_main_clause(tokens, j + 1, lex):
            boundary_j = j
            cond_end = j
            break

    has_prefix_clause = _substantive_prefix(tokens, ti, lex)

    if cond_end <= ti:
        raise MalformedClauseError("empty condition")
    condition = _strip_edges(text[spans[ti + 1][1]:spans[cond_end][2]]) if ti + 1 <= cond_end else ""

    effect = ""
    if has_prefix_clause:
        # Trailing/juxtaposed form: effect precedes the trigger.
        conj = max((k for k in range(ti) if tokens[k] in CLAUSE_CONJUNCTIONS),
                   default=None)
        lo = spans[conj + 1][1] if conj is not None and conj + 1 < ti else spans[0][1]
        effect = _strip_edges(text[lo:spans[ti][1]])
        if boundary_j is not None and boundary_j < n - 1:
            dropped = _strip_edges(text[spans[boundary_j + 1][1]:])
            log.info("discontiguous effect: dropping trailing clause %r in %r",
                     dropped, text)
    elif boundary_j is not None:
        effect = _strip_edges(text[spans[boundary_j + 1][1]:])
    else:
        # Comma-less leading conditional: find the main-verb boundary.
        cand = None
        for j in range(ti + 2, n):
            t = tokens[j]
            if t not in lex:
                continue
            if tokens[j - 1] in ("to", "and", "or", "not") or tokens[j - 1].endswith("n't"):
                continue
            if j + 1 < n and tokens[j + 1] in AUXILIARIES:
                continue
            cand = j
        if cand is None:
            raise MalformedClauseError(f"no main clause in {text!r}")
        cend = cand - 1
        if tokens[cend] == "then":
            cend -= 1
        if cend <= ti:
            raise MalformedClauseError("empty condition")
        condition = _strip_edges(text[spans[ti + 1][1]:spans[cend][2]])
        effect = _strip_edges(text[spans[cand][1]:])

    if not condition or not effect:
        raise MalformedClauseError(f"degenerate split of {text!r}")
    return condition, effect


def detect_conditional(s: Sentence, lex: ImperativeLexicon | None = None) -> Optional[ConditionalSplit]:
    """Decision-point detection: a trigger word heading a subordinate
    clause attached to a main clause. Questions and complement uses
    ("Check if ...") are excluded."""
    lex = lex or default_lexicon()
    tokens = list(s.tokens)
    if not tokens:
        return None
    if s.text.rstrip().endswith("?"):
        return None
    if tokens[0] in INTERROGATIVES:
        return None

    for ti, tok in enumerate(tokens):
        if tok not in TRIGGER_WORDS:
            continue
        if ti > 0 and tokens[ti - 1] in COMPLEMENT_VERBS:
            continue
        # Inverted-question form: "When can a technician be called"
        if ti == 0 and len(tokens) > 1 and tokens[1] in AUXILIARIES:
            return None
        try:
            condition, effect = split_condition_effect(s, ti, lex)
        except MalformedClauseError:
            continue
        trigger = TRIGGER_WORDS[tok]
        polarity = Polarity.INVERTED if trigger is Trigger.UNLESS else Polarity.DIRECT
        return ConditionalSplit(
            trigger=trigger,
            trigger_index=ti,
            condition=condition,
            effect=effect,
            polarity=polarity,
            condition_negated=detect_negation(condition),
        )
    return None


# --------------------------------------------------------------------------
# Similarity
# --------------------------------------------------------------------------

def similarity(a: str, b: str) -> float:
    """Cosine over binary token-presence vectors; stopwords retained."""
    sa, sb = set(tokenize(a)), set(tokenize(b))
    if not sa or not sb:
        return 0.0
    inter = len(sa & sb)
    return inter / math.sqrt(len(sa) * len(sb))
