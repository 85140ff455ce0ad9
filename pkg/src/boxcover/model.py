"""Domain types, validation and rank-space helpers.

All solver logic works on ranks: x-rank is the position of a point in the
x-sorted order, y-rank counts points from the top (rank 1 = largest y).
Lines and vertical boundaries are *gap indices* ``t`` in ``0..n``; a
horizontal line at gap ``t`` lies strictly below the ``t`` topmost points,
a vertical boundary at gap ``b`` lies strictly right of the ``b`` leftmost
points.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class InstanceError(ValueError):
    """Raised when a raw point list cannot become an :class:`Instance`."""


class DuplicateX(InstanceError):
    pass


class DuplicateY(InstanceError):
    pass


class NonFinite(InstanceError):
    pass


class CoverageMode(enum.Enum):
    SYMMETRIC_DIFFERENCE = "symdiff"
    UNION = "union"
    SINGLE_MATRIX = "matrix"


@dataclass(frozen=True)
class WeightedPoint:
    x: float
    y: float
    w: float


@dataclass(frozen=True)
class Instance:
    """A validated point set sorted by x with y-ranks attached.

    ``y_rank[i]`` is the 1-based rank of ``points[i]`` by decreasing y.
    """

    points: tuple[WeightedPoint, ...]
    y_rank: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def xs(self) -> np.ndarray:
        return np.array([p.x for p in self.points], dtype=float)

    @property
    def ys(self) -> np.ndarray:
        return np.array([p.y for p in self.points], dtype=float)

    @property
    def weights(self) -> np.ndarray:
        return np.array([p.w for p in self.points], dtype=float)

    def by_y_rank(self) -> list[int]:
        """Point indices ordered by y-rank (topmost first)."""
        order = [0] * self.n
        for i, r in enumerate(self.y_rank):
            order[r - 1] = i
        return order


@dataclass(frozen=True)
class AxisBox:
    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float
    empty: bool = False

    def contains(self, x: float, y: float) -> bool:
        if self.empty:
            return False
        return self.x_lo < x < self.x_hi and self.y_lo < y < self.y_hi


@dataclass
class Solution:
    objective: float
    case_id: str
    line_gaps: tuple[int, ...]
    block_boundaries: tuple[int, ...]
    boxes: list[AxisBox]
    mode: CoverageMode
    matrix: tuple[tuple[float, ...], ...] = ()
    shape: str | None = None
    case_objectives: dict[str, float] | None = field(default=None, repr=False)
    stats: object = field(default=None, repr=False, compare=False)


def validate_instance(raw_points: Iterable[Sequence[float]]) -> Instance:
    """Sort ``(x, y, w)`` triples by x and compute y-ranks.

    Duplicated coordinates are rejected rather than perturbed.
    """
    pts = []
    for triple in raw_points:
        x, y, w = (float(v) for v in triple)
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(w)):
            raise NonFinite(f"non-finite value in point {triple!r}")
        pts.append(WeightedPoint(x, y, w))

    pts.sort(key=lambda p: p.x)
    for a, b in zip(pts, pts[1:]):
        if a.x == b.x:
            raise DuplicateX(f"two points share x = {a.x!r}")
    by_y = sorted(range(len(pts)), key=lambda i: -pts[i].y)
    for a, b in zip(by_y, by_y[1:]):
        if pts[a].y == pts[b].y:
            raise DuplicateY(f"two points share y = {pts[a].y!r}")

    y_rank = [0] * len(pts)
    for r, i in enumerate(by_y, start=1):
        y_rank[i] = r
    return Instance(tuple(pts), tuple(y_rank))


def check_gaps(gaps: Sequence[int], n: int, what: str = "gap") -> tuple[int, ...]:
    gaps = tuple(int(t) for t in gaps)
    for t in gaps:
        if not 0 <= t <= n:
            raise ValueError(f"{what} index {t} outside 0..{n}")
    for a, b in zip(gaps, gaps[1:]):
        if a > b:
            raise ValueError(f"{what} indices not nondecreasing: {gaps}")
    return gaps


def strip_of(instance: Instance, point_index: int, line_gaps: Sequence[int]) -> int:
    """Horizontal strip (1..m) holding a point, or 0 when outside every strip."""
    gaps = check_gaps(line_gaps, instance.n)
    r = instance.y_rank[point_index]
    for i in range(1, len(gaps)):
        if gaps[i - 1] < r <= gaps[i]:
            return i
    return 0


def block_of(x_rank: int, boundaries: Sequence[int]) -> int:
    """Column (1..m) of a 1-based x-rank under block boundaries, 0 if none."""
    for j in range(1, len(boundaries)):
        if boundaries[j - 1] < x_rank <= boundaries[j]:
            return j
    return 0


def region_weight(instance: Instance, boxes: Sequence[AxisBox], mode: CoverageMode) -> float:
    """Total weight covered by ``boxes`` under symmetric-difference or union."""
    if mode is CoverageMode.SINGLE_MATRIX:
        raise ValueError("single-matrix coverage is evaluated with matrix_weight")
    total = 0.0
    for p in instance.points:
        hits = sum(1 for b in boxes if b.contains(p.x, p.y))
        if mode is CoverageMode.SYMMETRIC_DIFFERENCE:
            covered = hits % 2 == 1
        else:
            covered = hits > 0
        if covered:
            total += p.w
    return total


def matrix_weight(instance: Instance, matrix, line_gaps: Sequence[int],
                  block_boundaries: Sequence[int]) -> float:
    """Evaluate a sector matrix directly for fixed lines and block boundaries."""
    a = np.asarray(matrix, dtype=float)
    m = a.shape[0]
    if len(line_gaps) != m + 1 or len(block_boundaries) != m + 1:
        raise ValueError(f"need {m + 1} line gaps and {m + 1} boundaries for m={m}")
    gaps = check_gaps(line_gaps, instance.n)
    bounds = check_gaps(block_boundaries, instance.n, "boundary")
    total = 0.0
    for i, p in enumerate(instance.points):
        s = strip_of(instance, i, gaps)
        c = block_of(i + 1, bounds)
        if s and c:
            total += a[s - 1, c - 1] * p.w
    return total


def x_separator(instance: Instance, b: int) -> float:
    """x-coordinate strictly between the ``b`` leftmost points and the rest."""
    xs = [p.x for p in instance.points]
    return _separator(xs, b)


def y_separator(instance: Instance, t: int) -> float:
    """y-coordinate strictly below the ``t`` topmost points and above the rest."""
    ys_desc = [instance.points[i].y for i in instance.by_y_rank()]
    # negate so the same ascending rule applies
    return -_separator([-y for y in ys_desc], t)


def _separator(ascending: list[float], b: int) -> float:
    n = len(ascending)
    if not 0 <= b <= n:
        raise ValueError(f"separator index {b} outside 0..{n}")
    if n == 0:
        return 0.0
    if b == 0:
        return ascending[0] - 1.0
    if b == n:
        return ascending[-1] + 1.0
    return (ascending[b - 1] + ascending[b]) / 2.0


def realize_geometry(instance: Instance, case, line_gaps: Sequence[int],
                     block_boundaries: Sequence[int]) -> list[AxisBox]:
    """Turn a combinatorial witness into coordinate boxes, one per case rectangle.

    A rectangle whose row or column span is empty in rank space comes out as a
    zero-area box flagged ``empty``; it is still emitted so the list keeps one
    entry per rectangle of the case decomposition.
    """
    m = case.m
    gaps = check_gaps(line_gaps, instance.n)
    bounds = check_gaps(block_boundaries, instance.n, "boundary")
    if len(gaps) != m + 1 or len(bounds) != m + 1:
        raise ValueError(f"need {m + 1} line gaps and {m + 1} boundaries for m={m}")

    boxes = []
    for rect in case.decomposition:
        if not (1 <= rect.row_lo <= rect.row_hi <= m and 1 <= rect.col_lo <= rect.col_hi <= m):
            raise ValueError(f"rectangle {rect} outside 1..{m}")
        b_lo, b_hi = bounds[rect.col_lo - 1], bounds[rect.col_hi]
        t_top, t_bot = gaps[rect.row_lo - 1], gaps[rect.row_hi]
        boxes.append(AxisBox(
            x_lo=x_separator(instance, b_lo),
            x_hi=x_separator(instance, b_hi),
            y_lo=y_separator(instance, t_bot),
            y_hi=y_separator(instance, t_top),
            empty=(b_lo == b_hi or t_top == t_bot),
        ))
    return boxes
