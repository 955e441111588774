"""Term probabilities, bigram PMI, and the visualization vocabulary.

Probabilities normalize within an arity stratum: unigram probabilities over
total unigram mass, bigram probabilities over total bigram mass. A bigram
enters the vocabulary only when its PMI (log base 2) strictly exceeds the
threshold; unigrams are never PMI-filtered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .corpus import Term, TermCounts, term_text
from .errors import ConfigError, InputError

PMI_LOG_BASE = 2

PHI_MODES = ("token", "doc")


@dataclass(frozen=True)
class VocabularyConfig:
    min_count: int = 5
    min_pmi: float = 8.0
    phi_mode: str = "token"

    def __post_init__(self):
        if self.min_count < 1:
            raise ConfigError("min_count must be >= 1")
        if self.phi_mode not in PHI_MODES:
            raise ConfigError(f"phi_mode must be one of {PHI_MODES}, got {self.phi_mode!r}")


def term_probability(counts: TermCounts, term: Term, phi_mode: str = "token") -> float:
    """Selected count of the term over the total for terms of its arity."""
    total = counts.phi_total(len(term), phi_mode)
    if total <= 0:
        raise InputError("no terms of this arity")
    return counts.phi(term, phi_mode) / total


def pmi(counts: TermCounts, term: Term, phi_mode: str = "token") -> float:
    """log2 of the bigram probability over the product of its word probabilities."""
    if len(term) != 2:
        raise ValueError("PMI is defined for bigrams")
    pr_term = term_probability(counts, term, phi_mode)
    pr_words = [term_probability(counts, (w,), phi_mode) for w in term]
    if pr_term == 0.0 or 0.0 in pr_words:
        raise InputError(f"zero probability for {term_text(term)!r} or a constituent word")
    return math.log2(pr_term / (pr_words[0] * pr_words[1]))


@dataclass(frozen=True)
class VocabEntry:
    term: Term
    text: str
    token_counts: tuple[int, int]
    doc_counts: tuple[int, int]
    pmi: float | None  # None for unigrams


class Vocabulary:
    """Filtered term set, ordered lexicographically by term string."""

    def __init__(self, entries: list[VocabEntry], config: VocabularyConfig):
        self.entries = entries
        self.config = config
        self._by_term = {e.term: e for e in entries}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, term: Term) -> bool:
        return term in self._by_term

    def get(self, term: Term) -> VocabEntry | None:
        return self._by_term.get(term)

    def phi_of(self, entry: VocabEntry, k: int) -> int:
        """Selected per-category count for ranking and statistics."""
        if self.config.phi_mode == "token":
            return entry.token_counts[k]
        return entry.doc_counts[k]

    def arity_entries(self, arity: int) -> list[VocabEntry]:
        return [e for e in self.entries if len(e.term) == arity]


def build_vocabulary(counts: TermCounts, config: VocabularyConfig | None = None) -> Vocabulary:
    """Select terms with corpus-wide count >= min_count; bigrams also need PMI > min_pmi."""
    if config is None:
        config = VocabularyConfig()
    entries = []
    for term in sorted(counts.token_counts, key=term_text):
        if counts.phi(term, config.phi_mode) < config.min_count:
            continue
        score = None
        if len(term) == 2:
            score = pmi(counts, term, config.phi_mode)
            if not score > config.min_pmi:
                continue
        entries.append(
            VocabEntry(term, term_text(term), counts.tokens(term), counts.docs(term), score)
        )
    if not entries:
        raise ConfigError("vocabulary empty; lower m or p")
    return Vocabulary(entries, config)
