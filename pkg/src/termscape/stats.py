"""Per-term association significance: smoothed log-odds difference z-scores.

For a term with counts y_a, y_b in the two categories, stratum totals n_a,
n_b, pseudo-count alpha per term, and alpha_total = alpha * (stratum size):

    delta    = ln[(y_a + alpha) / (n_a + alpha_total - y_a - alpha)]
             - ln[(y_b + alpha) / (n_b + alpha_total - y_b - alpha)]
    variance = 1/(y_a + alpha) + 1/(y_b + alpha)
    z        = delta / sqrt(variance)

Two-sided p-values come from the standard Normal CDF. Unigram and bigram
strata are kept separate: totals and the Dirichlet mass both stay within a
term's own arity.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from .corpus import Term
from .errors import ConfigError, InputError
from .vocab import Vocabulary

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class StatsConfig:
    alpha: float = 0.01
    significance_level: float = 0.05

    def __post_init__(self):
        if self.alpha <= 0:
            raise ConfigError("alpha must be positive")
        if not 0 < self.significance_level < 1:
            raise ConfigError("significance_level must be in (0, 1)")


@dataclass(frozen=True)
class TermStats:
    term: Term
    delta: float
    variance: float
    z: float
    p: float
    associated_with: int | None  # category index, or None when not significant


def normal_cdf(x: float) -> float:
    """Standard Normal CDF via erfc, accurate in both tails."""
    return 0.5 * math.erfc(-x / _SQRT2)


def two_sided_p(z: float) -> float:
    # erfc(|z|/sqrt 2) equals 2*(1 - Phi(|z|)) without cancellation; the
    # floor keeps p inside (0, 1] when erfc underflows for huge |z|.
    return max(math.erfc(abs(z) / _SQRT2), sys.float_info.min)


def log_odds_z(
    y_a: float, n_a: float, y_b: float, n_b: float, alpha: float, alpha_total: float
) -> tuple[float, float, float]:
    """(delta, variance, z) for one term; see the module formulas."""
    denom_a = n_a + alpha_total - y_a - alpha
    denom_b = n_b + alpha_total - y_b - alpha
    if denom_a <= 0 or denom_b <= 0:
        raise InputError("degenerate category totals")
    delta = math.log((y_a + alpha) / denom_a) - math.log((y_b + alpha) / denom_b)
    variance = 1.0 / (y_a + alpha) + 1.0 / (y_b + alpha)
    return delta, variance, delta / math.sqrt(variance)


def compute_stats(vocab: Vocabulary, config: StatsConfig | None = None) -> dict[Term, TermStats]:
    """z-scores and p-values for every vocabulary term, per arity stratum."""
    if config is None:
        config = StatsConfig()
    results: dict[Term, TermStats] = {}
    for arity in (1, 2):
        entries = vocab.arity_entries(arity)
        if not entries:
            continue
        n_a = sum(vocab.phi_of(e, 0) for e in entries)
        n_b = sum(vocab.phi_of(e, 1) for e in entries)
        alpha_total = config.alpha * len(entries)
        for entry in entries:
            delta, variance, z = log_odds_z(
                vocab.phi_of(entry, 0), n_a, vocab.phi_of(entry, 1), n_b,
                config.alpha, alpha_total,
            )
            p = two_sided_p(z)
            associated = None
            if p < config.significance_level:
                associated = 0 if z > 0 else 1
            results[entry.term] = TermStats(entry.term, delta, variance, z, p, associated)
    return results


def associated_terms(
    stats: dict[Term, TermStats], config: StatsConfig | None = None
) -> tuple[set[Term], set[Term]]:
    """Disjoint sets of terms significantly associated with each category."""
    if config is None:
        config = StatsConfig()
    set_a = {t for t, s in stats.items() if s.p < config.significance_level and s.z > 0}
    set_b = {t for t, s in stats.items() if s.p < config.significance_level and s.z < 0}
    return set_a, set_b
