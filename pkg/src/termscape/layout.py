"""Rank-frequency coordinates, corner association scores, and colors.

Each axis ranks the vocabulary by its count in one category, ascending, with
equal counts ordered by term string so the alphabetically-last term gets the
larger rank. Coordinates are rank / |V|, which keeps both axes on (0, 1]
regardless of category sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .corpus import Term
from .vocab import Vocabulary

SQRT2 = math.sqrt(2.0)

# 11-class ColorBrewer RdYlBu, red end first. The midpoint is the pale
# yellow that marks terms used evenly by both categories.
RDYLBU_11 = (
    "#a50026", "#d73027", "#f46d43", "#fdae61", "#fee090", "#ffffbf",
    "#e0f3f8", "#abd9e9", "#74add1", "#4575b4", "#313695",
)
SIMILARITY_STOPS = ("#d9d9d9", "#3f007d")  # gray end also catches negatives
ZERO_SCORE_COLOR = "#d3d3d3"  # exact-zero external scores


@dataclass
class TermPoint:
    """A term's full per-point record as it will appear in the payload."""

    term: Term
    text: str
    x_a: float
    x_b: float
    s_a: float
    s_b: float
    assoc_a: float
    assoc_b: float
    color: float  # assoc_b - assoc_a, the diverging-scale coordinate
    freq_a: int
    freq_b: int
    doc_freq_a: int
    doc_freq_b: int
    rank_a: int
    rank_b: int
    z: float | None = None
    p: float | None = None
    similarity: float | None = None
    external_score: float | None = None


def rank_terms(vocab: Vocabulary, k: int) -> dict[Term, int]:
    """Ranks 1..|V| of the selected count in category k, ties alphabetical."""
    order = sorted(vocab.entries, key=lambda e: (vocab.phi_of(e, k), e.text))
    return {e.term: rank for rank, e in enumerate(order, start=1)}


def coordinate(rank: int, size: int) -> float:
    return rank / size


def corner_distance(x_a: float, x_b: float, k: int) -> float:
    """Euclidean distance to category k's corner of the unit square."""
    if k == 0:
        return math.hypot(1.0 - x_a, x_b)
    return math.hypot(x_a, 1.0 - x_b)


def association_score(s: float) -> float:
    """Rescale a corner distance so 1 means the category's own corner."""
    return 1.0 - s / SQRT2


def layout_points(vocab: Vocabulary) -> list[TermPoint]:
    """Coordinates, corner scores, and color coordinates for all of V."""
    ranks_a = rank_terms(vocab, 0)
    ranks_b = rank_terms(vocab, 1)
    size = len(vocab)
    points = []
    for entry in vocab.entries:
        r_a, r_b = ranks_a[entry.term], ranks_b[entry.term]
        x_a, x_b = coordinate(r_a, size), coordinate(r_b, size)
        s_a, s_b = corner_distance(x_a, x_b, 0), corner_distance(x_a, x_b, 1)
        assoc_a, assoc_b = association_score(s_a), association_score(s_b)
        points.append(
            TermPoint(
                term=entry.term,
                text=entry.text,
                x_a=x_a,
                x_b=x_b,
                s_a=s_a,
                s_b=s_b,
                assoc_a=assoc_a,
                assoc_b=assoc_b,
                color=assoc_b - assoc_a,
                freq_a=entry.token_counts[0],
                freq_b=entry.token_counts[1],
                doc_freq_a=entry.doc_counts[0],
                doc_freq_b=entry.doc_counts[1],
                rank_a=r_a,
                rank_b=r_b,
            )
        )
    return points


def pixel_position(x_a: float, x_b: float, width: float, height: float) -> tuple[float, float]:
    """Chart-pixel position: x_a rightward, x_b upward (screen y grows down)."""
    return x_a * width, (1.0 - x_b) * height


def _hex_to_rgb(color: str) -> tuple[int, int, int]:
    value = color.lstrip("#")
    return int(value[0:2], 16), int(value[2:4], 16), int(value[4:6], 16)


def _rgb_to_hex(rgb: tuple[float, float, float]) -> str:
    return "#{:02x}{:02x}{:02x}".format(*(round(c) for c in rgb))


def interpolate_stops(stops: tuple[str, ...], t: float) -> str:
    """Piecewise-linear sRGB interpolation over hex stops, t clamped to [0, 1]."""
    t = min(max(t, 0.0), 1.0)
    if len(stops) == 1:
        return stops[0]
    scaled = t * (len(stops) - 1)
    low = min(int(scaled), len(stops) - 2)
    frac = scaled - low
    c0, c1 = _hex_to_rgb(stops[low]), _hex_to_rgb(stops[low + 1])
    return _rgb_to_hex(tuple(a + (b - a) * frac for a, b in zip(c0, c1)))


def diverging_color(value: float, stops: tuple[str, ...] = RDYLBU_11) -> str:
    """Map a coordinate in [-1, 1] through the diverging ramp."""
    return interpolate_stops(stops, (value + 1.0) / 2.0)


def similarity_color(similarity: float, stops: tuple[str, ...] = SIMILARITY_STOPS) -> str:
    """Gray-to-purple ramp for query similarity; negatives clamp to gray."""
    return interpolate_stops(stops, similarity)


def color_for(point: TermPoint, external_scale: float | None = None) -> str:
    """RGB hex for a point: association color, or the external-score channel.

    When external_scale (the max |score| over the chart) is given and the
    point carries a score, the score is mapped through the diverging ramp
    instead; exact zeros render light gray.
    """
    if external_scale is not None and point.external_score is not None:
        if point.external_score == 0:
            return ZERO_SCORE_COLOR
        if external_scale <= 0:
            raise ValueError("external_scale must be positive")
        return diverging_color(point.external_score / external_scale)
    return diverging_color(point.color)
