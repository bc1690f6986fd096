"""HTML ingestion: parse into a navigable DOM, scrub template noise, and
surface list candidates with the text context that precedes them.

The parser is forgiving: malformed markup never raises, it yields a
best-effort tree (unclosed tags are auto-closed, stray end tags ignored).
Text placement relative to child elements is preserved so document-order
text assembly is exact, which the context extractor and the paragraph
boundary bookkeeping rely on.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from html.parser import HTMLParser
from typing import Iterable, Iterator, Optional

from .errors import EmptyInputError

# Tags whose subtree is dropped outright when scrubbing template noise.
DEFAULT_SCRUB_TAGS = frozenset(
    {"script", "style", "nav", "header", "footer", "aside", "form"}
)

# class/id tokens that mark template chrome on real support sites.
DEFAULT_SCRUB_PATTERNS = (
    r"nav(bar|igation)?",
    r"menu",
    r"side(bar)?",
    r"footer",
    r"masthead",
    r"banner",
    r"breadcrumbs?",
    r"cookie.*",
    r"advert(isement)?s?",
    r"ads?",
    r"toolbar",
    r"share-buttons?",
)

VOID_TAGS = frozenset(
    {"area", "base", "br", "col", "embed", "hr", "img", "input",
     "link", "meta", "param", "source", "track", "wbr"}
)

# Elements that force a hard text boundary (paragraph/sentence break).
BLOCK_TAGS = frozenset(
    {"address", "article", "aside", "blockquote", "br", "caption", "dd",
     "div", "dl", "dt", "fieldset", "figcaption", "figure", "footer",
     "form", "h1", "h2", "h3", "h4", "h5", "h6", "header", "hr", "li",
     "main", "nav", "ol", "p", "pre", "section", "table", "tbody", "td",
     "tfoot", "th", "thead", "tr", "ul"}
)

LIST_TAGS = frozenset({"ol", "ul"})

_WS_RE = re.compile(r"\s+")

# Word tokens: runs of letters/digits, with hyphen/dot/slash/apostrophe
# allowed only between alphanumerics ("i/o", "7.1.0.4", "doesn't").
_TOKEN_RE = re.compile(r"[^\W_]+(?:[.\-/'][^\W_]+)*", re.UNICODE)

# Abbreviations that must not end a sentence even before an uppercase word.
_ABBREVIATIONS = frozenset(
    {"e.g", "i.e", "etc", "vs", "no", "fig", "figs", "sec", "min", "max",
     "approx", "dept", "inc", "ltd", "corp", "mr", "mrs", "ms", "dr",
     "st", "ver", "rev", "cf", "al", "ca"}
)

_SENT_BREAK_RE = re.compile(r"([.!?])\s+(?=[A-Z0-9])")


def normalize_ws(text: str) -> str:
    return _WS_RE.sub(" ", text).strip()


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens; punctuation is a separator except when it
    joins alphanumerics inside one token."""
    text = text.replace("’", "'")
    return [m.group(0).lower() for m in _TOKEN_RE.finditer(text)]


def token_spans(text: str) -> list[tuple[str, int, int]]:
    """Tokens with their (start, end) character offsets in ``text``."""
    text_n = text.replace("’", "'")
    return [(m.group(0).lower(), m.start(), m.end())
            for m in _TOKEN_RE.finditer(text_n)]


@dataclass
class Sentence:
    text: str
    tokens: tuple[str, ...]
    char_span: tuple[int, int]

    @classmethod
    def from_text(cls, text: str, start: int = 0) -> "Sentence":
        return cls(text=text, tokens=tuple(tokenize(text)),
                   char_span=(start, start + len(text)))


def _is_abbreviation(text: str, dot_pos: int) -> bool:
    """True when the '.' at ``dot_pos`` ends a known abbreviation or a
    single-letter initial, so the candidate split must be suppressed."""
    j = dot_pos
    while j > 0 and (text[j - 1].isalnum() or text[j - 1] == "."):
        j -= 1
    word = text[j:dot_pos].lower().rstrip(".")
    if word in _ABBREVIATIONS:
        return True
    if len(word) == 1 and word.isalpha():
        return True
    return False


def segment_sentences(text: str) -> list[Sentence]:
    """Best-effort rule-based sentence splitting.

    Splits at .!? followed by whitespace and an uppercase letter or digit,
    and at hard line boundaries; a fixed abbreviation list guards against
    false splits. Never returns empty sentences.
    """
    sentences: list[Sentence] = []
    offset = 0
    for chunk in text.split("\n"):
        start = 0
        for m in _SENT_BREAK_RE.finditer(chunk):
            if m.group(1) == "." and _is_abbreviation(chunk, m.start(1)):
                continue
            piece = chunk[start:m.end(1)]
            stripped = piece.strip()
            if stripped:
                lead = len(piece) - len(piece.lstrip())
                abs_start = offset + start + lead
                sentences.append(Sentence(stripped, tuple(tokenize(stripped)),
                                          (abs_start, abs_start + len(stripped))))
            start = m.end()
        piece = chunk[start:]
        stripped = piece.strip()
        if stripped:
            lead = len(piece) - len(piece.lstrip())
            abs_start = offset + start + lead
            sentences.append(Sentence(stripped, tuple(tokenize(stripped)),
                                      (abs_start, abs_start + len(stripped))))
        offset += len(chunk) + 1
    return sentences


# --------------------------------------------------------------------------
# DOM
# --------------------------------------------------------------------------

@dataclass
class DomNode:
    tag: str
    attrs: dict[str, str] = field(default_factory=dict)
    children: list["DomNode"] = field(default_factory=list)
    node_path: tuple[int, ...] = ()
    # Own text, split by position: (slot, chunk) means the chunk sits just
    # before children[slot] (slot == len(children) puts it after the last).
    text_parts: list[tuple[int, str]] = field(default_factory=list)

    @property
    def text(self) -> str:
        return normalize_ws(" ".join(chunk for _, chunk in self.text_parts))

    def iter_content(self) -> Iterator[object]:
        """Own text chunks and children interleaved in document order."""
        parts = sorted(self.text_parts, key=lambda p: p[0])
        pi = 0
        for ci, child in enumerate(self.children):
            while pi < len(parts) and parts[pi][0] <= ci:
                yield parts[pi][1]
                pi += 1
            yield child
        while pi < len(parts):
            yield parts[pi][1]
            pi += 1

    def walk(self) -> Iterator["DomNode"]:
        yield self
        for child in self.children:
            yield from child.walk()

    def find(self, path: tuple[int, ...]) -> Optional["DomNode"]:
        node = self
        for i in path:
            if i >= len(node.children):
                return None
            node = node.children[i]
        return node


@dataclass
class Document:
    url: str
    dom: DomNode
    title: str = ""

    def find(self, path: Iterable[int]) -> Optional[DomNode]:
        return self.dom.find(tuple(path))


class _TreeBuilder(HTMLParser):
    """Forgiving tree builder on top of the stdlib tokenizer."""

    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.root = DomNode(tag="#document")
        self.stack: list[DomNode] = [self.root]
        self.title_chunks: list[str] = []
        self._in_head = 0
        self._in_title = False
        self._drop_text_depth = 0  # inside script/style

    def _top(self) -> DomNode:
        return self.stack[-1]

    def _append_node(self, tag: str, attrs: list[tuple[str, Optional[str]]]) -> DomNode:
        node = DomNode(tag=tag, attrs={k: (v or "") for k, v in attrs})
        self._top().children.append(node)
        return node

    def _pop_to_tag(self, tag: str) -> None:
        names = [n.tag for n in self.stack]
        if tag in names[1:]:
            idx = len(names) - 1 - names[::-1].index(tag)
            del self.stack[idx:]

    def _implicit_closes(self, tag: str) -> None:
        if tag == "li":
            # A new <li> closes the one open under the nearest list.
            names = [n.tag for n in self.stack]
            last_list = max((i for i, t in enumerate(names) if t in LIST_TAGS),
                            default=-1)
            for i in range(len(names) - 1, last_list, -1):
                if names[i] == "li":
                    del self.stack[i:]
                    break
        elif tag in BLOCK_TAGS:
            while self._top().tag == "p":
                self.stack.pop()
        if tag in ("td", "th"):
            while self._top().tag in ("td", "th"):
                self.stack.pop()
        elif tag == "tr":
            while self._top().tag in ("td", "th", "tr"):
                self.stack.pop()

    def handle_starttag(self, tag: str, attrs: list[tuple[str, Optional[str]]]) -> None:
        if tag == "head":
            self._in_head += 1
            return
        if tag == "title" and self._in_head:
            self._in_title = True
            return
        if self._in_head:
            return
        self._implicit_closes(tag)
        node = self._append_node(tag, attrs)
        if tag in VOID_TAGS:
            return
        self.stack.append(node)
        if tag in ("script", "style"):
            self._drop_text_depth += 1

    def handle_startendtag(self, tag: str, attrs: list[tuple[str, Optional[str]]]) -> None:
        if self._in_head:
            return
        self._append_node(tag, attrs)

    def handle_endtag(self, tag: str) -> None:
        if tag == "head":
            self._in_head = max(0, self._in_head - 1)
            return
        if tag == "title":
            self._in_title = False
            return
        if self._in_head or tag in VOID_TAGS:
            return
        if tag in ("script", "style"):
            names = [n.tag for n in self.stack]
            if tag in names[1:]:
                self._drop_text_depth = max(0, self._drop_text_depth - 1)
        self._pop_to_tag(tag)

    def handle_data(self, data: str) -> None:
        if self._in_title:
            self.title_chunks.append(data)
            return
        if self._in_head or self._drop_text_depth:
            return
        if not data.strip():
            return
        top = self._top()
        top.text_parts.append((len(top.children), data))


def _assign_paths(node: DomNode, path: tuple[int, ...] = ()) -> None:
    node.node_path = path
    for i, child in enumerate(node.children):
        _assign_paths(child, path + (i,))


def _merge_text(node: DomNode) -> None:
    """Collapse whitespace in text chunks, merging adjacent ones per slot."""
    merged: dict[int, list[str]] = {}
    for slot, chunk in node.text_parts:
        merged.setdefault(slot, []).append(chunk)
    node.text_parts = [
        (slot, normalize_ws(" ".join(chunks)))
        for slot, chunks in sorted(merged.items())
        if normalize_ws(" ".join(chunks))
    ]
    for child in node.children:
        _merge_text(child)


def parse_document(raw: bytes, url: str = "") -> Document:
    """Parse raw HTML bytes into a Document; malformed markup never aborts."""
    text = raw.decode("utf-8", errors="replace")
    if not text.strip():
        raise EmptyInputError(f"no content in document {url!r}")
    builder = _TreeBuilder()
    builder.feed(text)
    builder.close()
    _merge_text(builder.root)
    _assign_paths(builder.root)
    return Document(url=url, dom=builder.root,
                    title=normalize_ws(" ".join(builder.title_chunks)))


# --------------------------------------------------------------------------
# Scrubbing
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ScrubConfig:
    tags: frozenset[str] = DEFAULT_SCRUB_TAGS
    class_id_patterns: tuple[str, ...] = DEFAULT_SCRUB_PATTERNS
    dissolve_anchors: bool = True

    def matcher(self) -> re.Pattern:
        return re.compile("|".join(f"(?:{p})" for p in self.class_id_patterns),
                          re.IGNORECASE)


def _matches_pattern(node: DomNode, pat: re.Pattern) -> bool:
    ident = node.attrs.get("id", "")
    if ident and pat.fullmatch(ident):
        return True
    for cls in node.attrs.get("class", "").split():
        if pat.fullmatch(cls):
            return True
    return False


def _scrub_node(node: DomNode, cfg: ScrubConfig, pat: re.Pattern) -> DomNode:
    out = DomNode(tag=node.tag, attrs=dict(node.attrs))
    parts: list[tuple[int, str]] = []
    for item in node.iter_content():
        if isinstance(item, str):
            parts.append((len(out.children), item))
            continue
        if item.tag in cfg.tags or _matches_pattern(item, pat):
            continue
        if cfg.dissolve_anchors and item.tag == "a":
            # Keep the anchor's text, drop its markup.
            inner = subtree_text(item)
            if inner:
                parts.append((len(out.children), inner))
            continue
        out.children.append(_scrub_node(item, cfg, pat))
    # Merge chunks that landed on the same slot after removals.
    merged: dict[int, list[str]] = {}
    for slot, chunk in parts:
        merged.setdefault(slot, []).append(chunk)
    out.text_parts = [(slot, " ".join(chunks)) for slot, chunks in sorted(merged.items())]
    return out


def scrub_template(doc: Document, cfg: ScrubConfig | None = None) -> Document:
    """Copy of ``doc`` with template elements removed (lists left intact)."""
    cfg = cfg or ScrubConfig()
    root = _scrub_node(doc.dom, cfg, cfg.matcher())
    _assign_paths(root)
    return Document(url=doc.url, dom=root, title=doc.title)


# --------------------------------------------------------------------------
# Document-order text assembly
# --------------------------------------------------------------------------

_BOUNDARY = object()


def _iter_events(node: DomNode, skip_lists: bool, stop_at: Optional[tuple[int, ...]]):
    """Yield text chunks and boundary markers in document order.

    ``skip_lists`` drops every ol/ul subtree; ``stop_at`` raises
    _StopWalk when the node at that path is reached.
    """
    if stop_at is not None and node.node_path == stop_at:
        raise _StopWalk
    is_block = node.tag in BLOCK_TAGS or node.tag == "#document"
    if is_block:
        yield _BOUNDARY
    for item in node.iter_content():
        if isinstance(item, str):
            yield item
        else:
            if skip_lists and item.tag in LIST_TAGS:
                # Nothing outside a list precedes a target nested in here.
                if stop_at is not None and _is_prefix(item.node_path, stop_at):
                    raise _StopWalk
                yield _BOUNDARY
                continue
            yield from _iter_events(item, skip_lists, stop_at)
    if is_block:
        yield _BOUNDARY


class _StopWalk(Exception):
    pass


def _is_prefix(prefix: tuple[int, ...], path: tuple[int, ...]) -> bool:
    return len(prefix) <= len(path) and path[: len(prefix)] == prefix


def _collect_runs(events) -> list[str]:
    runs: list[str] = []
    current: list[str] = []
    def flush():
        if current:
            text = normalize_ws(" ".join(current))
            if text:
                runs.append(text)
            current.clear()
    try:
        for ev in events:
            if ev is _BOUNDARY:
                flush()
            else:
                current.append(ev)
    except _StopWalk:
        pass
    flush()
    return runs


def text_runs(node: DomNode, skip_lists: bool = False) -> list[str]:
    """Whitespace-normalized text runs of a subtree, split at block edges."""
    return _collect_runs(_iter_events(node, skip_lists, None))


def subtree_text(node: DomNode) -> str:
    return normalize_ws(" ".join(text_runs(node)))


def preceding_runs(doc: Document, target: tuple[int, ...]) -> list[str]:
    """Text runs before ``target`` in document order, list interiors excluded."""
    return _collect_runs(_iter_events(doc.dom, True, target))


# --------------------------------------------------------------------------
# List candidates
# --------------------------------------------------------------------------

class ListKind(str, Enum):
    ORDERED = "ORDERED"
    UNORDERED = "UNORDERED"


@dataclass
class ListItem:
    text: str
    sentences: list[Sentence]
    sublist_paths: list[tuple[int, ...]]
    paragraph_breaks: list[int]


@dataclass
class ListCandidate:
    doc_url: str
    node_path: tuple[int, ...]
    list_kind: ListKind
    items: list[ListItem]
    context: list[Sentence]
    depth: int

    @property
    def item_sentences(self) -> list[Sentence]:
        return [s for item in self.items for s in item.sentences]


def _sentences_from_runs(runs: list[str]) -> tuple[str, list[Sentence], list[int]]:
    """Join runs into one text; return (text, sentences, break indices).

    A paragraph break index b marks a hard boundary immediately before
    sentence b.
    """
    text_parts: list[str] = []
    sentences: list[Sentence] = []
    breaks: list[int] = []
    offset = 0
    for run in runs:
        if text_parts:
            offset += 1  # joining space
        if sentences and run:
            breaks.append(len(sentences))
        for s in segment_sentences(run):
            sentences.append(Sentence(s.text, s.tokens,
                                      (s.char_span[0] + offset, s.char_span[1] + offset)))
        text_parts.append(run)
        offset += len(run)
    full = " ".join(text_parts)
    breaks = [b for b in breaks if b < len(sentences)]
    return full, sentences, breaks


def _direct_sublists(node: DomNode) -> list[DomNode]:
    """Descendant list nodes with no other list on the path from ``node``."""
    found: list[DomNode] = []
    def visit(n: DomNode) -> None:
        for child in n.children:
            if child.tag in LIST_TAGS:
                found.append(child)
            else:
                visit(child)
    visit(node)
    return found


def _build_item(li: DomNode) -> ListItem:
    text, sentences, breaks = _sentences_from_runs(text_runs(li))
    return ListItem(
        text=text,
        sentences=sentences,
        sublist_paths=[n.node_path for n in _direct_sublists(li)],
        paragraph_breaks=breaks,
    )


def extract_list_candidates(doc: Document, k: int = 1) -> list[ListCandidate]:
    """Every ol/ul node as a candidate, in breadth-first document order.

    Context is the last ``k`` sentences of non-list text preceding the
    list node in document order.
    """
    queue: list[DomNode] = [doc.dom]
    lists: list[DomNode] = []
    ancestors: dict[tuple[int, ...], int] = {doc.dom.node_path: 0}
    while queue:
        node = queue.pop(0)
        depth = ancestors[node.node_path]
        if node.tag in LIST_TAGS:
            lists.append(node)
        for child in node.children:
            ancestors[child.node_path] = depth + (1 if node.tag in LIST_TAGS else 0)
            queue.append(child)

    candidates: list[ListCandidate] = []
    for node in lists:
        _, pre_sents, _ = _sentences_from_runs(preceding_runs(doc, node.node_path))
        context = pre_sents[-k:] if k > 0 else []
        items = [_build_item(ch) for ch in node.children if ch.tag == "li"]
        candidates.append(ListCandidate(
            doc_url=doc.url,
            node_path=node.node_path,
            list_kind=ListKind.ORDERED if node.tag == "ol" else ListKind.UNORDERED,
            items=items,
            context=context,
            depth=ancestors[node.node_path],
        ))
    return candidates


# --------------------------------------------------------------------------
# JSON Lines dump/load for candidates (debugging + the `flow` CLI contract)
# --------------------------------------------------------------------------

def sentence_to_dict(s: Sentence) -> dict:
    return {"text": s.text, "tokens": list(s.tokens), "char_span": list(s.char_span)}


def sentence_from_dict(d: dict) -> Sentence:
    return Sentence(d["text"], tuple(d["tokens"]), tuple(d["char_span"]))


def candidate_to_dict(c: ListCandidate) -> dict:
    return {
        "doc_url": c.doc_url,
        "node_path": list(c.node_path),
        "list_kind": c.list_kind.value,
        "items": [
            {
                "text": it.text,
                "sentences": [sentence_to_dict(s) for s in it.sentences],
                "sublist_paths": [list(p) for p in it.sublist_paths],
                "paragraph_breaks": list(it.paragraph_breaks),
            }
            for it in c.items
        ],
        "context": [sentence_to_dict(s) for s in c.context],
        "depth": c.depth,
    }


def candidate_from_dict(d: dict) -> ListCandidate:
    return ListCandidate(
        doc_url=d["doc_url"],
        node_path=tuple(d["node_path"]),
        list_kind=ListKind(d["list_kind"]),
        items=[
            ListItem(
                text=it["text"],
                sentences=[sentence_from_dict(s) for s in it["sentences"]],
                sublist_paths=[tuple(p) for p in it["sublist_paths"]],
                paragraph_breaks=list(it["paragraph_breaks"]),
            )
            for it in d["items"]
        ],
        context=[sentence_from_dict(s) for s in d["context"]],
        depth=d["depth"],
    )


def dump_candidates(candidates: Iterable[ListCandidate]) -> str:
    return "".join(json.dumps(candidate_to_dict(c), sort_keys=True) + "\n"
                   for c in candidates)


def load_candidates(text: str) -> list[ListCandidate]:
    return [candidate_from_dict(json.loads(line))
            for line in text.splitlines() if line.strip()]
