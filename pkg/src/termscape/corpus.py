"""Corpus ingestion: document parsing, tokenization, and term counting.

Terms are unigrams and within-sentence adjacent bigrams, represented as
tuples of lowercase words. Counting is a commutative monoid over documents:
counting any partition of the corpus and merging gives the same result as a
single pass.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from typing import IO, Iterable, TextIO

from .errors import ConfigError, InputError

Term = tuple[str, ...]


def term_text(term: Iterable[str]) -> str:
    """Space-joined display form of a term; the canonical sort key."""
    return " ".join(term)


@dataclass(frozen=True)
class Document:
    id: str
    category: str
    text: str


@dataclass
class Corpus:
    """Documents labeled with exactly one of two category names."""

    labels: tuple[str, str]
    documents: list[Document]
    skipped: int = 0  # records whose category matched neither label

    def category_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown category {label!r}") from None

    def size(self, label: str) -> int:
        return sum(1 for d in self.documents if d.category == label)


# Sentences end at terminal punctuation followed by whitespace, or at
# newlines. Words are \w runs, optionally joined by internal apostrophes,
# so the segmentation stays language-independent (no stemming, no stoplists).
_SENTENCE_BREAK = re.compile(r"(?P<punct>[.!?]+)\s+|\n+")
_WORD = re.compile(r"\w+(?:['’]\w+)*")


def sentence_spans(text: str) -> list[tuple[int, int]]:
    """Character spans of sentences, terminal punctuation included."""
    spans = []
    start = 0
    for m in _SENTENCE_BREAK.finditer(text):
        end = m.end("punct") if m.group("punct") else m.start()
        if end > start:
            spans.append((start, end))
        start = m.end()
    if len(text) > start:
        spans.append((start, len(text)))
    return spans


def word_spans(text: str, start: int = 0, end: int | None = None) -> list[tuple[str, int, int]]:
    """Case-folded words with their character spans in ``text[start:end]``."""
    if end is None:
        end = len(text)
    return [(m.group().casefold(), m.start(), m.end()) for m in _WORD.finditer(text, start, end)]


def tokenize(text: str) -> list[list[str]]:
    """Split text into sentences of lowercase word tokens.

    Punctuation-only segments are discarded; empty text gives ``[]``.
    """
    sentences = []
    for s_start, s_end in sentence_spans(text):
        words = [w for w, _, _ in word_spans(text, s_start, s_end)]
        if words:
            sentences.append(words)
    return sentences


@dataclass
class TermCounts:
    """Per-term occurrence and document counts for the two categories.

    ``token_counts[t][k]`` is how often term ``t`` occurs in category ``k``;
    ``doc_counts[t][k]`` is the number of category-``k`` documents containing
    it. ``token_totals[arity][k]`` is the total occurrence count over all
    terms of that arity, so probabilities normalize within an arity stratum.
    """

    labels: tuple[str, str]
    token_counts: dict[Term, list[int]] = field(default_factory=dict)
    doc_counts: dict[Term, list[int]] = field(default_factory=dict)
    token_totals: dict[int, list[int]] = field(default_factory=lambda: {1: [0, 0], 2: [0, 0]})
    doc_totals: list[int] = field(default_factory=lambda: [0, 0])
    _doc_phi_totals: dict[int, int] = field(default_factory=dict, repr=False, compare=False)

    def tokens(self, term: Term) -> tuple[int, int]:
        counts = self.token_counts.get(term)
        return (counts[0], counts[1]) if counts else (0, 0)

    def docs(self, term: Term) -> tuple[int, int]:
        counts = self.doc_counts.get(term)
        return (counts[0], counts[1]) if counts else (0, 0)

    def phi(self, term: Term, phi_mode: str = "token") -> int:
        """Corpus-wide count of the selected kind (token or document)."""
        return sum(self.tokens(term) if phi_mode == "token" else self.docs(term))

    def phi_total(self, arity: int, phi_mode: str = "token") -> int:
        """Total of the selected count over all terms of one arity."""
        if phi_mode == "token":
            return sum(self.token_totals.get(arity, (0, 0)))
        if arity not in self._doc_phi_totals:
            self._doc_phi_totals[arity] = sum(
                sum(c) for t, c in self.doc_counts.items() if len(t) == arity
            )
        return self._doc_phi_totals[arity]


def count_terms(corpus: Corpus, cross_sentence: bool = False) -> TermCounts:
    """Accumulate unigram and bigram counts for every document.

    Bigrams do not span sentence boundaries unless ``cross_sentence`` is set.
    The result is independent of document order.
    """
    counts = TermCounts(corpus.labels)
    for doc in corpus.documents:
        _count_document(counts, corpus.category_index(doc.category), doc, cross_sentence)
    return counts


def _count_document(counts: TermCounts, k: int, doc: Document, cross_sentence: bool) -> None:
    counts.doc_totals[k] += 1
    sentences = tokenize(doc.text)
    seen: set[Term] = set()

    for words in sentences:
        counts.token_totals[1][k] += len(words)
        for w in words:
            _bump(counts.token_counts, (w,), k)
            seen.add((w,))

    if cross_sentence:
        flat = [w for words in sentences for w in words]
        streams = [flat]
    else:
        streams = sentences
    for words in streams:
        counts.token_totals[2][k] += max(len(words) - 1, 0)
        for pair in zip(words, words[1:]):
            _bump(counts.token_counts, pair, k)
            seen.add(pair)

    for term in seen:
        _bump(counts.doc_counts, term, k)


def _bump(table: dict[Term, list[int]], term: Term, k: int) -> None:
    counts = table.get(term)
    if counts is None:
        table[term] = counts = [0, 0]
    counts[k] += 1


def merge_counts(left: TermCounts, right: TermCounts) -> TermCounts:
    """Combine counts from two disjoint document sets."""
    if left.labels != right.labels:
        raise ConfigError("cannot merge counts with different category labels")
    merged = TermCounts(left.labels)
    for source in (left, right):
        for term, counts in source.token_counts.items():
            existing = merged.token_counts.setdefault(term, [0, 0])
            existing[0] += counts[0]
            existing[1] += counts[1]
        for term, counts in source.doc_counts.items():
            existing = merged.doc_counts.setdefault(term, [0, 0])
            existing[0] += counts[0]
            existing[1] += counts[1]
        for arity, totals in source.token_totals.items():
            existing = merged.token_totals.setdefault(arity, [0, 0])
            existing[0] += totals[0]
            existing[1] += totals[1]
        merged.doc_totals[0] += source.doc_totals[0]
        merged.doc_totals[1] += source.doc_totals[1]
    return merged


def parse_input(
    stream: IO,
    format: str,
    category_field: str,
    text_field: str,
    labels: tuple[str, str],
) -> Corpus:
    """Read a CSV or JSONL stream (text or UTF-8 bytes) into a Corpus.

    Records whose category matches neither label are skipped and counted,
    not silently dropped. Raises InputError if either category ends up with
    zero documents.
    """
    if len(labels) != 2 or labels[0] == labels[1] or not all(labels):
        raise ConfigError("labels must be two distinct non-empty category names")
    text_stream = _as_text(stream)
    if format == "csv":
        records = _read_csv(text_stream, category_field, text_field)
    elif format == "jsonl":
        records = _read_jsonl(text_stream, category_field, text_field)
    else:
        raise ConfigError(f"unknown input format {format!r}")

    documents: list[Document] = []
    skipped = 0
    for rec_no, (raw_id, category, text) in enumerate(records, start=1):
        if category not in labels:
            skipped += 1
            continue
        doc_id = f"doc-{rec_no}" if raw_id in (None, "") else str(raw_id)
        documents.append(Document(doc_id, category, text))

    corpus = Corpus(labels, documents, skipped)
    for label in labels:
        if corpus.size(label) == 0:
            raise InputError(f"empty category: {label}")
    return corpus


def _as_text(stream: IO) -> TextIO:
    if isinstance(stream.read(0), bytes):
        return io.TextIOWrapper(stream, encoding="utf-8", newline="")
    return stream


def _read_csv(text_stream: TextIO, category_field: str, text_field: str):
    reader = csv.DictReader(text_stream)
    fields = reader.fieldnames or []
    for name in (category_field, text_field):
        if fields and name not in fields:
            raise InputError(f"line 1: missing column {name!r}")
    try:
        for row in reader:
            category = row.get(category_field)
            text = row.get(text_field)
            if category is None or text is None:
                raise InputError(f"line {reader.line_num}: record is missing fields")
            yield row.get("id"), category, text
    except csv.Error as exc:
        raise InputError(f"line {reader.line_num}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise InputError(f"invalid UTF-8 in CSV input: {exc}") from exc


def _read_jsonl(text_stream: TextIO, category_field: str, text_field: str):
    try:
        for line_no, line in enumerate(text_stream, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InputError(f"line {line_no}: invalid JSON: {exc.msg}") from exc
            if not isinstance(record, dict):
                raise InputError(f"line {line_no}: expected a JSON object")
            for name in (category_field, text_field):
                if name not in record:
                    raise InputError(f"line {line_no}: missing field {name!r}")
            category, text = record[category_field], record[text_field]
            if not isinstance(category, str) or not isinstance(text, str):
                raise InputError(f"line {line_no}: category and text must be strings")
            yield record.get("id"), category, text
    except UnicodeDecodeError as exc:
        raise InputError(f"invalid UTF-8 in JSONL input: {exc}") from exc
