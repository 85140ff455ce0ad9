"""Maximum consecutive subsequence tree.

Each node keeps ``S`` (total), ``L`` (best block anchored at the left end,
or empty), ``M`` (best block anywhere, or empty) and ``R`` (best block
anchored at the right end, or empty), together with the half-open index
interval that attains ``L``, ``M`` and ``R``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Interval = tuple[int, int]


@dataclass(frozen=True)
class McsSummary:
    S: float
    L: float
    M: float
    R: float
    L_at: Interval
    M_at: Interval
    R_at: Interval

    def values(self) -> tuple[float, float, float, float]:
        return (self.S, self.L, self.M, self.R)


def empty_summary(pos: int = 0) -> McsSummary:
    e = (pos, pos)
    return McsSummary(0.0, 0.0, 0.0, 0.0, e, e, e)


def leaf(weight: float, index: int = 0) -> McsSummary:
    w = float(weight)
    if w > 0:
        span = (index, index + 1)
        return McsSummary(w, w, w, w, span, span, span)
    return McsSummary(w, 0.0, 0.0, 0.0, (index, index), (index, index), (index + 1, index + 1))


def _best(*candidates):
    # first listed candidate wins ties
    best = candidates[0]
    for c in candidates[1:]:
        if c[0] > best[0]:
            best = c
    return best


def merge_mcs(left: McsSummary, right: McsSummary) -> McsSummary:
    L, L_at = _best((left.L, left.L_at), (left.S + right.L, (left.L_at[0], right.L_at[1])))
    M, M_at = _best(
        (left.M, left.M_at),
        (left.R + right.L, (left.R_at[0], right.L_at[1])),
        (right.M, right.M_at),
    )
    R, R_at = _best((left.R + right.S, (left.R_at[0], right.R_at[1])), (right.R, right.R_at))
    return McsSummary(left.S + right.S, L, M, R, L_at, M_at, R_at)


class McsTree:
    """Array-backed complete binary tree; node 1 is the root."""

    def __init__(self, weights: Sequence[float]):
        self.n = len(weights)
        self.size = 1
        while self.size < max(self.n, 1):
            self.size *= 2
        self.weights = [float(w) for w in weights]
        self.nodes: list[McsSummary] = [empty_summary()] * (2 * self.size)
        for i in range(self.size):
            self.nodes[self.size + i] = self._leaf(i)
        for v in range(self.size - 1, 0, -1):
            self.nodes[v] = merge_mcs(self.nodes[2 * v], self.nodes[2 * v + 1])

    def _leaf(self, i: int) -> McsSummary:
        if i < self.n:
            return leaf(self.weights[i], i)
        return empty_summary(self.n)

    def update(self, index: int, weight: float) -> None:
        if not 0 <= index < self.n:
            raise IndexError(f"index {index} out of range for length {self.n}")
        self.weights[index] = float(weight)
        v = self.size + index
        self.nodes[v] = self._leaf(index)
        v //= 2
        while v:
            self.nodes[v] = merge_mcs(self.nodes[2 * v], self.nodes[2 * v + 1])
            v //= 2

    @property
    def root(self) -> McsSummary:
        return self.nodes[1]

    def query(self) -> tuple[float, Interval]:
        r = self.root
        return r.M, r.M_at


def build_mcs(weights: Sequence[float]) -> McsTree:
    return McsTree(weights)


def update_mcs(tree: McsTree, index: int, new_weight: float) -> None:
    tree.update(index, new_weight)


def query_mcs(tree: McsTree) -> tuple[float, Interval]:
    """Best block sum of the current weights (0 for the empty block) and its interval."""
    return tree.query()
