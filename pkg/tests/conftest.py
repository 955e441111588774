"""Shared builders for synthetic corpora used across the test suite."""

from __future__ import annotations

import numpy as np

from termscape import Corpus, Document

LABELS = ("alpha", "beta")


def pseudo_word(i: int) -> str:
    """Bijective base-26 encoding: 0 -> a, 25 -> z, 26 -> aa, ..."""
    out = []
    i += 1
    while i:
        i, rem = divmod(i - 1, 26)
        out.append(chr(97 + rem))
    return "".join(reversed(out))


def make_corpus(rows: list[tuple[str, str]], labels=LABELS) -> Corpus:
    docs = [Document(f"doc-{i}", cat, text) for i, (cat, text) in enumerate(rows, 1)]
    return Corpus(labels, docs, 0)


def docs_from_stream(words: list[str], rng: np.random.Generator,
                     n_docs: int, sentence_len: int = 5) -> list[str]:
    """Chop a token stream into documents of sentence-delimited text."""
    n_docs = max(1, min(n_docs, len(words)))
    bounds = np.linspace(0, len(words), n_docs + 1).astype(int)
    docs = []
    for lo, hi in zip(bounds, bounds[1:]):
        chunk = words[lo:hi]
        sentences = [
            " ".join(chunk[j : j + sentence_len])
            for j in range(0, len(chunk), sentence_len)
        ]
        docs.append(". ".join(sentences) + ".")
    return docs


def corpus_from_counts(
    counts_a: dict[str, int],
    counts_b: dict[str, int],
    rng: np.random.Generator,
    n_docs_per_cat: int = 4,
    labels=LABELS,
) -> Corpus:
    """Build a corpus whose unigram counts per category are exactly as given."""
    rows = []
    for label, counts in zip(labels, (counts_a, counts_b)):
        stream = [w for w, c in counts.items() for _ in range(c)]
        stream = [stream[i] for i in rng.permutation(len(stream))]
        rows.extend((label, text) for text in docs_from_stream(stream, rng, n_docs_per_cat))
    rows = [rows[i] for i in rng.permutation(len(rows))]
    return make_corpus(rows, labels)


def grouped_tie_counts(rng: np.random.Generator, n_groups: int):
    """Tie groups with per-category counts unique to each group.

    Returns (counts_a, counts_b, groups). Because no two groups share a
    count value within a category, each group forms its own full tie set
    in both frequency tables. Count values stay small (2..2*n_groups) so
    a 15-group corpus never exceeds a few thousand tokens.
    """
    sizes = rng.integers(1, 5, size=n_groups)
    values_a = 2 + 2 * rng.permutation(n_groups)
    values_b = 2 + 2 * rng.permutation(n_groups)
    counts_a: dict[str, int] = {}
    counts_b: dict[str, int] = {}
    groups: list[list[str]] = []
    word_index = 0
    for g in range(n_groups):
        group = []
        for _ in range(int(sizes[g])):
            word = pseudo_word(word_index)
            word_index += 1
            counts_a[word] = int(values_a[g])
            counts_b[word] = int(values_b[g])
            group.append(word)
        groups.append(sorted(group))
    return counts_a, counts_b, groups


def zipf_tie_corpus(seed: int, vocab_size: int = 300, scale: float = 120.0,
                    labels=LABELS) -> Corpus:
    """Zipf-shaped counts with a long quantized tail, so ties are plentiful."""
    rng = np.random.default_rng(seed)
    words = [pseudo_word(i) for i in range(vocab_size)]
    counts = {}
    for k in range(2):
        perm = rng.permutation(vocab_size)
        counts[k] = {
            words[w]: 5 + int(scale / (pos + 1) ** 0.85)
            for pos, w in enumerate(perm)
        }
    return corpus_from_counts(counts[0], counts[1], rng, n_docs_per_cat=6, labels=labels)
