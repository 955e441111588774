"""Word-vector similarity: table loading, phrase vectors, query ranking.

Vectors are an external text file (word followed by its components, one per
line), so the engine works with GloVe-style dumps and tiny synthetic tables
alike. Phrase vectors are the mean of the constituent word vectors that are
present; a term with no constituent in the table has no vector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import Term, tokenize
from .errors import InputError
from .vocab import Vocabulary

_INT = frozenset("0123456789")


class VectorTable:
    """Immutable word -> dense vector map with a single dimension."""

    def __init__(self, words: dict[str, int], matrix: np.ndarray):
        self._rows = words
        self.matrix = matrix
        self.dim = int(matrix.shape[1])

    def __len__(self) -> int:
        return len(self._rows)

    def __contains__(self, word: str) -> bool:
        return word in self._rows

    def get(self, word: str) -> np.ndarray | None:
        row = self._rows.get(word)
        return None if row is None else self.matrix[row]


def load_vectors(path) -> VectorTable:
    """Parse a whitespace-separated embedding file.

    An optional first line of two integers (count, dimension) is skipped.
    Duplicate words keep their first vector.
    """
    words: dict[str, int] = {}
    rows: list[list[float]] = []
    dim: int | None = None
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            parts = line.split()
            if not parts:
                continue
            if line_no == 1 and len(parts) == 2 and all(set(p) <= _INT and p for p in parts):
                continue  # header line
            word, values = parts[0], parts[1:]
            if not values:
                raise InputError(f"line {line_no}: no vector components")
            try:
                vector = [float(v) for v in values]
            except ValueError:
                raise InputError(f"line {line_no}: unparsable vector component") from None
            if dim is None:
                dim = len(vector)
            elif len(vector) != dim:
                raise InputError(f"line {line_no}: expected {dim} dimensions, got {len(vector)}")
            if word in words:
                continue
            words[word] = len(rows)
            rows.append(vector)
    if not rows:
        raise InputError("no vectors")
    return VectorTable(words, np.asarray(rows, dtype=np.float64))


def term_vector(words, table: VectorTable) -> np.ndarray | None:
    """Mean vector over the constituent words present in the table.

    Returns None when every constituent is out of vocabulary (undefined is a
    value here, not an error).
    """
    present = [v for v in (table.get(w) for w in words) if v is not None]
    if not present:
        return None
    return np.mean(present, axis=0)


def cosine_similarity(u: np.ndarray, v: np.ndarray) -> float:
    """u.v / (|u||v|), clamped to [-1, 1] against rounding."""
    norm_u = float(np.linalg.norm(u))
    norm_v = float(np.linalg.norm(v))
    if norm_u == 0.0 or norm_v == 0.0:
        raise ValueError("zero vector")
    value = float(np.dot(u, v)) / (norm_u * norm_v)
    return min(1.0, max(-1.0, value))


@dataclass
class SimilarityResult:
    """Cosine similarities to a query, plus per-category ranked term lists."""

    query: str
    similarities: dict[Term, float]
    ranked: tuple[list[tuple[str, float]], list[tuple[str, float]]]


def similar_category_terms(
    query: str,
    vocab: Vocabulary,
    associated: tuple[set[Term], set[Term]],
    table: VectorTable,
    k: int = 10,
) -> SimilarityResult:
    """Rank each category's associated terms by similarity to the query.

    Similarity is computed for every vocabulary term with a defined vector;
    terms with no vector are left out (the chart colors them neutrally).
    Ranked lists sort by similarity descending, ties by term string, and
    truncate to k.
    """
    query_words = [w for sentence in tokenize(query) for w in sentence]
    query_vec = term_vector(query_words, table)
    if query_vec is None or not np.any(query_vec):
        raise InputError("query has no vector")

    similarities: dict[Term, float] = {}
    for entry in vocab.entries:
        vec = term_vector(entry.term, table)
        if vec is None or not np.any(vec):
            continue
        similarities[entry.term] = cosine_similarity(query_vec, vec)

    ranked = []
    for category_terms in associated:
        scored = [
            (vocab.get(t).text, similarities[t])
            for t in category_terms
            if t in similarities
        ]
        scored.sort(key=lambda pair: (-pair[1], pair[0]))
        ranked.append(scored[:k])
    return SimilarityResult(query, similarities, (ranked[0], ranked[1]))
