"""Greedy non-overlapping label placement over a uniform-grid collision index.

Point markers are indexed first, then points are visited in descending
association order; each tries eight compass slots in a fixed order and takes
the first in-bounds box that collides with nothing already drawn. Greedy
order is load-bearing, so placement is strictly sequential.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConfigError


@dataclass(frozen=True)
class Rect:
    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def intersects(self, other: "Rect") -> bool:
        """True only for positive-area overlap; touching edges do not count."""
        return (
            min(self.x_max, other.x_max) > max(self.x_min, other.x_min)
            and min(self.y_max, other.y_max) > max(self.y_min, other.y_min)
        )


@dataclass(frozen=True)
class FontMetrics:
    """Monospace label-size estimate shared with the viewer."""

    glyph_width: float = 6.0
    line_height: float = 12.0
    point_radius: float = 3.0
    label_offset: float = 3.0

    def __post_init__(self):
        for name in ("glyph_width", "line_height", "point_radius", "label_offset"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"font metric {name} must be positive")


SLOT_ORDER = ("N", "S", "E", "W", "NE", "SW", "NW", "SE")


class OutOfBoundsError(ValueError):
    """Candidate label box falls outside the chart."""


def estimate_label_box(
    text: str,
    anchor: tuple[float, float],
    slot: str,
    metrics: FontMetrics,
    width: float,
    height: float,
) -> Rect:
    """Deterministic box for a label at one of the 8 compass slots.

    Box size is len(text) * glyph_width by line_height, offset from the
    marker edge by label_offset. Raises OutOfBoundsError when the box would
    leave the chart, so the caller can try the next slot.
    """
    w = len(text) * metrics.glyph_width
    h = metrics.line_height
    gap = metrics.point_radius + metrics.label_offset
    x, y = anchor

    if slot == "N":
        box = Rect(x - w / 2, y - gap - h, x + w / 2, y - gap)
    elif slot == "S":
        box = Rect(x - w / 2, y + gap, x + w / 2, y + gap + h)
    elif slot == "E":
        box = Rect(x + gap, y - h / 2, x + gap + w, y + h / 2)
    elif slot == "W":
        box = Rect(x - gap - w, y - h / 2, x - gap, y + h / 2)
    elif slot == "NE":
        box = Rect(x + gap, y - gap - h, x + gap + w, y - gap)
    elif slot == "SW":
        box = Rect(x - gap - w, y + gap, x - gap, y + gap + h)
    elif slot == "NW":
        box = Rect(x - gap - w, y - gap - h, x - gap, y - gap)
    elif slot == "SE":
        box = Rect(x + gap, y + gap, x + gap + w, y + gap + h)
    else:
        raise ValueError(f"unknown slot {slot!r}")

    if box.x_min < 0 or box.y_min < 0 or box.x_max > width or box.y_max > height:
        raise OutOfBoundsError("out of bounds")
    return box


class GridIndex:
    """Uniform-grid rectangle index; cell size defaults to the line height.

    collides() is exact: candidate cells are scanned but every hit is
    re-tested with the positive-area intersection predicate.
    """

    def __init__(self, cell_size: float):
        if cell_size <= 0:
            raise ConfigError("cell_size must be positive")
        self.cell_size = cell_size
        self._cells: dict[tuple[int, int], list[Rect]] = {}
        self._count = 0

    def __len__(self) -> int:
        return self._count

    def _cell_range(self, rect: Rect) -> Iterable[tuple[int, int]]:
        cx0 = int(rect.x_min // self.cell_size)
        cx1 = int(rect.x_max // self.cell_size)
        cy0 = int(rect.y_min // self.cell_size)
        cy1 = int(rect.y_max // self.cell_size)
        for cx in range(cx0, cx1 + 1):
            for cy in range(cy0, cy1 + 1):
                yield cx, cy

    def insert(self, rect: Rect) -> None:
        for cell in self._cell_range(rect):
            self._cells.setdefault(cell, []).append(rect)
        self._count += 1

    def collides(self, rect: Rect) -> bool:
        for cell in self._cell_range(rect):
            for other in self._cells.get(cell, ()):
                if rect.intersects(other):
                    return True
        return False


@dataclass(frozen=True)
class LabelPoint:
    """A candidate to label: pixel anchor plus placement priority."""

    text: str
    px: float
    py: float
    priority: float


@dataclass(frozen=True)
class PlacedLabel:
    text: str
    rect: Rect
    slot: str


def marker_rect(px: float, py: float, radius: float) -> Rect:
    return Rect(px - radius, py - radius, px + radius, py + radius)


def place_labels(
    points: Sequence[LabelPoint],
    metrics: FontMetrics,
    width: float,
    height: float,
) -> list[PlacedLabel]:
    """Label as many points as fit without overlap, highest priority first.

    All markers are indexed before any label is tried, so no label ever
    covers a point marker. Ties in priority break by term string.
    """
    index = GridIndex(metrics.line_height)
    for point in points:
        index.insert(marker_rect(point.px, point.py, metrics.point_radius))

    placed = []
    for point in sorted(points, key=lambda p: (-p.priority, p.text)):
        for slot in SLOT_ORDER:
            try:
                box = estimate_label_box(
                    point.text, (point.px, point.py), slot, metrics, width, height
                )
            except OutOfBoundsError:
                continue
            if index.collides(box):
                continue
            index.insert(box)
            placed.append(PlacedLabel(point.text, box, slot))
            break
    return placed
