"""Exhaustive reference solvers.

Nothing here touches the tree or sweep code.  Boxes are enumerated in rank
space: an x-interval of x-ranks times a y-interval of y-ranks.  That is
complete because, with no two points aligned, any box can have its edges
slid into the gaps between consecutive coordinates without changing which
points it holds.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

from .model import CoverageMode, Instance


class SizeGuardError(ValueError):
    """The requested enumeration exceeds its work budget."""


def brute_force_1d(columns: Sequence[Sequence[float]], m: int | None = None,
                   budget: int = 5_000_000) -> tuple[float, tuple[int, ...]]:
    """Best assignment of ``m`` contiguous blocks by trying every boundary tuple.

    Returns the maximum and the lexicographically smallest tuple attaining it.
    """
    cols = np.asarray(columns, dtype=float)
    n = len(columns)
    if m is None:
        if n == 0:
            raise ValueError("m is required for an empty column matrix")
        m = cols.shape[1]
    cols = cols.reshape(n, m)
    if comb(n + m + 1, m + 1) > budget:
        raise SizeGuardError(f"{comb(n + m + 1, m + 1)} boundary tuples exceed budget {budget}")

    # prefix[r, j] = sum of column j over the first r elements
    prefix = np.zeros((n + 1, m))
    prefix[1:] = np.cumsum(cols, axis=0)
    tuples = _boundary_tuples(n, m)
    cols_idx = np.arange(m)
    totals = (prefix[tuples[:, 1:], cols_idx] - prefix[tuples[:, :-1], cols_idx]).sum(axis=1)
    # tuples are in lexicographic order, argmax returns the first maximizer
    best = int(np.argmax(totals))
    return float(totals[best]), tuple(int(v) for v in tuples[best])


@lru_cache(maxsize=64)
def _boundary_tuples(n: int, m: int) -> np.ndarray:
    tuples = np.array(list(itertools.combinations_with_replacement(range(n + 1), m + 1)),
                      dtype=np.int64)
    tuples.flags.writeable = False
    return tuples


def _rank_grid(instance: Instance) -> np.ndarray:
    """grid[y_rank-1, x_rank-1] = weight, zero elsewhere."""
    n = instance.n
    grid = np.zeros((n, n))
    for i, p in enumerate(instance.points):
        grid[instance.y_rank[i] - 1, i] = p.w
    return grid


def _prefix2d(instance: Instance) -> np.ndarray:
    n = instance.n
    P = np.zeros((n + 1, n + 1))
    P[1:, 1:] = _rank_grid(instance).cumsum(0).cumsum(1)
    return P


def brute_force_single_box(instance: Instance, max_n: int = 40) -> float:
    """Max weight of one box over all rank-space rectangles (empty box included)."""
    n = instance.n
    if n > max_n:
        raise SizeGuardError(f"n={n} exceeds single-box limit {max_n}")
    if n == 0:
        return 0.0
    P = _prefix2d(instance)
    # rectangle (t1, t2] x (b1, b2] for every index quadruple; t1 >= t2 or
    # b1 >= b2 give zero or sign-flipped sums, so restrict to t1 < t2, b1 < b2
    t1, t2, b1, b2 = np.ix_(*(np.arange(n + 1),) * 4)
    sums = P[t2, b2] - P[t1, b2] - P[t2, b1] + P[t1, b1]
    valid = (t1 < t2) & (b1 < b2)
    return float(max(0.0, sums[np.broadcast_to(valid, sums.shape)].max()))


def _box_masks(instance: Instance) -> np.ndarray:
    """Distinct point-membership bitmasks over all rank-space rectangles, plus 0."""
    n = instance.n
    masks = {0}
    for x1 in range(n):
        for x2 in range(x1 + 1, n + 1):
            for y1 in range(n):
                for y2 in range(y1 + 1, n + 1):
                    mask = 0
                    for i in range(x1, x2):
                        if y1 < instance.y_rank[i] <= y2:
                            mask |= 1 << i
                    masks.add(mask)
    return np.array(sorted(masks), dtype=np.int64)


def _subset_weights(instance: Instance) -> np.ndarray:
    n = instance.n
    table = np.zeros(1 << n)
    for i, p in enumerate(instance.points):
        table[1 << i:1 << (i + 1)] = table[:1 << i] + p.w
    return table


def brute_force_k_box(instance: Instance, k: int, mode: CoverageMode,
                      max_n: int = 12) -> float:
    """Max weight covered by ``k`` boxes, by parity (symdiff) or any-cover (union).

    Every box is one of the rank-space rectangles; the reachable coverage
    sets after placing boxes one at a time are tracked as bitmasks, so all
    k-tuples are scored without listing duplicates twice.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if mode is CoverageMode.SINGLE_MATRIX:
        raise ValueError("use brute_force_shape for single-matrix shapes")
    n = instance.n
    if n > max_n:
        raise SizeGuardError(f"n={n} exceeds k-box limit {max_n}")
    boxes = _box_masks(instance)
    combine = np.bitwise_xor if mode is CoverageMode.SYMMETRIC_DIFFERENCE else np.bitwise_or
    reach = np.array([0], dtype=np.int64)
    for _ in range(k):
        reach = np.unique(combine.outer(reach, boxes))
    return float(_subset_weights(instance)[reach].max())


def _nested_intervals(n: int) -> np.ndarray:
    """All (a, c, d, b) with 0 <= a <= c <= d <= b <= n."""
    return np.array(list(itertools.combinations_with_replacement(range(n + 1), 4)), dtype=np.int64)


def brute_force_shape(instance: Instance, name: str, max_n: int = 9) -> float:
    """Best annulus or cross placement over rank-space nested rectangle pairs.

    annulus: outer (a, b] x (a', b'] minus inner (c, d] x (c', d'] nested in it.
    cross: vertical bar (c, d] x (a', b'] united with horizontal bar (a, b] x (c', d'].
    """
    if name not in ("annulus", "cross"):
        raise ValueError(f"unknown shape {name!r}")
    n = instance.n
    if n > max_n:
        raise SizeGuardError(f"n={n} exceeds shape limit {max_n}")
    if n == 0:
        return 0.0
    P = _prefix2d(instance)
    xs = _nested_intervals(n)
    ys = _nested_intervals(n)
    xa, xc, xd, xb = (xs[:, i][None, :] for i in range(4))
    ya, yc, yd, yb = (ys[:, i][:, None] for i in range(4))

    def rect(t1, t2, b1, b2):
        return P[t2, b2] - P[t1, b2] - P[t2, b1] + P[t1, b1]

    inner = rect(yc, yd, xc, xd)
    if name == "annulus":
        vals = rect(ya, yb, xa, xb) - inner
    else:
        vals = rect(ya, yb, xc, xd) + rect(yc, yd, xa, xb) - inner
    return float(max(0.0, vals.max()))
