"""Generalized MCS-tree over ``m`` column weight functions.

Every element ``x`` carries column weights ``f[0..m-1]``; the tree answers
the 1-D problem of choosing contiguous, possibly empty blocks
``V_1, ..., V_m`` (in this order) maximizing ``sum_j f_j(V_j)``.

Columns are 0-based here.  A choice of blocks is encoded by boundaries
``b_0 <= ... <= b_m`` (gap indices), column ``c`` holding the elements at
positions ``b_c .. b_{c+1}-1``.  Every stored value carries the slice of
the boundary tuple it decides:

* ``S[s][e]`` covers the whole span with columns ``s..e``: ``(b_s, ..., b_{e+1})``
* ``L[s]`` starts at the left end (or is empty): ``(b_s, ..., b_m)``
* ``R[e]`` ends at the right end (or is empty): ``(b_0, ..., b_{e+1})``
* ``M`` anywhere: ``(b_0, ..., b_m)``

Joining a left and a right witness that share column ``i`` is always
``left[:-1] + right[1:]``.  Ties between candidates go to the
lexicographically smallest boundary tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

NEG = float("-inf")

Witness = tuple[int, ...]


@dataclass
class GNodeSummary:
    m: int
    M: float
    L: list[float]
    R: list[float]
    S: list[list[float]]  # S[s][e], only s <= e is meaningful
    M_at: Witness
    L_at: list[Witness]
    R_at: list[Witness]
    S_at: list[list[Witness]]

    def values(self) -> tuple:
        """Every stored number in a fixed order: M, L, R, then S row-major."""
        tri = [self.S[s][e] for s in range(self.m) for e in range(s, self.m)]
        return (self.M, *self.L, *self.R, *tri)

    @property
    def value_count(self) -> int:
        return 1 + 2 * self.m + self.m * (self.m + 1) // 2


def _pick(cands):
    best_v, best_w = cands[0]
    for v, w in cands[1:]:
        if v > best_v or (v == best_v and w < best_w):
            best_v, best_w = v, w
    return best_v, best_w


def empty_summary(m: int, pos: int = 0) -> GNodeSummary:
    """Summary of a span with no elements, sitting at gap ``pos``."""
    return GNodeSummary(
        m=m,
        M=0.0,
        L=[0.0] * m,
        R=[0.0] * m,
        S=[[0.0] * m for _ in range(m)],
        M_at=(pos,) * (m + 1),
        L_at=[(pos,) * (m - s + 1) for s in range(m)],
        R_at=[(pos,) * (e + 2) for e in range(m)],
        S_at=[[(pos,) * (e - s + 2) if e >= s else () for e in range(m)] for s in range(m)],
    )


def leaf_summary(f: Sequence[float], index: int = 0) -> GNodeSummary:
    """Summary of the single element at position ``index`` with column weights ``f``.

    The element lands in exactly one column, so ``S[s][e]`` is the best
    ``f_j`` over ``s <= j <= e``; ``L``, ``R`` and ``M`` may also leave it out.
    """
    m = len(f)
    if m < 1:
        raise ValueError("need at least one column")
    f = [float(v) for v in f]
    p = index

    def at(j, lo, hi):
        # boundaries b_lo..b_hi with the element in column j
        return tuple(p if c <= j else p + 1 for c in range(lo, hi + 1))

    S = [[NEG] * m for _ in range(m)]
    S_at = [[()] * m for _ in range(m)]
    for s in range(m):
        for e in range(s, m):
            S[s][e], S_at[s][e] = _pick([(f[j], at(j, s, e + 1)) for j in range(s, e + 1)])

    L, L_at, R, R_at = [], [], [], []
    for s in range(m):
        v, w = _pick([(0.0, (p,) * (m - s + 1))] + [(f[j], at(j, s, m)) for j in range(s, m)])
        L.append(v)
        L_at.append(w)
    for e in range(m):
        v, w = _pick([(0.0, (p + 1,) * (e + 2))] + [(f[j], at(j, 0, e + 1)) for j in range(e + 1)])
        R.append(v)
        R_at.append(w)
    M, M_at = _pick([(0.0, (p,) * (m + 1))] + [(f[j], at(j, 0, m)) for j in range(m)])
    return GNodeSummary(m, M, L, R, S, M_at, L_at, R_at, S_at)


def _join(a: Witness, b: Witness) -> Witness:
    return a[:-1] + b[1:]


def merge_gmcs(left: GNodeSummary, right: GNodeSummary) -> GNodeSummary:
    if left.m != right.m:
        raise ValueError(f"column count mismatch: {left.m} vs {right.m}")
    m = left.m
    S = [[NEG] * m for _ in range(m)]
    S_at = [[()] * m for _ in range(m)]
    for s in range(m):
        for e in range(s, m):
            S[s][e], S_at[s][e] = _pick([
                (left.S[s][i] + right.S[i][e], _join(left.S_at[s][i], right.S_at[i][e]))
                for i in range(s, e + 1)
            ])

    L, L_at = [], []
    for s in range(m):
        v, w = _pick([(left.L[s], left.L_at[s])] + [
            (left.S[s][i] + right.L[i], _join(left.S_at[s][i], right.L_at[i]))
            for i in range(s, m)
        ])
        L.append(v)
        L_at.append(w)

    R, R_at = [], []
    for e in range(m):
        v, w = _pick([(right.R[e], right.R_at[e])] + [
            (left.R[i] + right.S[i][e], _join(left.R_at[i], right.S_at[i][e]))
            for i in range(e + 1)
        ])
        R.append(v)
        R_at.append(w)

    M, M_at = _pick([(left.M, left.M_at), (right.M, right.M_at)] + [
        (left.R[i] + right.L[i], _join(left.R_at[i], right.L_at[i])) for i in range(m)
    ])
    return GNodeSummary(m, M, L, R, S, M_at, L_at, R_at, S_at)


class GMcsTree:
    """Complete binary tree of :class:`GNodeSummary`, node 1 is the root.

    Padding leaves beyond ``n`` are empty spans placed at gap ``n``.
    ``merges`` counts merge calls, for complexity checks.
    """

    def __init__(self, columns: Sequence[Sequence[float]], m: int | None = None):
        rows = [list(map(float, r)) for r in columns]
        if m is None:
            if not rows:
                raise ValueError("m is required for an empty column matrix")
            m = len(rows[0])
        for r in rows:
            if len(r) != m:
                raise ValueError(f"ragged column matrix: row of length {len(r)}, expected {m}")
        self.m = m
        self.n = len(rows)
        self.columns = rows
        self.size = 1
        while self.size < max(self.n, 1):
            self.size *= 2
        self.merges = 0
        self.nodes: list[GNodeSummary | None] = [None] * (2 * self.size)
        for i in range(self.size):
            self.nodes[self.size + i] = self._leaf(i)
        for v in range(self.size - 1, 0, -1):
            self._remerge(v)

    def _leaf(self, i: int) -> GNodeSummary:
        if i < self.n:
            return leaf_summary(self.columns[i], i)
        return empty_summary(self.m, self.n)

    def _remerge(self, v: int) -> None:
        self.nodes[v] = merge_gmcs(self.nodes[2 * v], self.nodes[2 * v + 1])
        self.merges += 1

    def update(self, index: int, f: Sequence[float]) -> None:
        if not 0 <= index < self.n:
            raise IndexError(f"index {index} out of range for length {self.n}")
        if len(f) != self.m:
            raise ValueError(f"expected {self.m} column weights, got {len(f)}")
        self.columns[index] = [float(v) for v in f]
        v = self.size + index
        self.nodes[v] = self._leaf(index)
        v //= 2
        while v:
            self._remerge(v)
            v //= 2

    @property
    def root(self) -> GNodeSummary:
        return self.nodes[1]

    def query(self) -> tuple[float, Witness]:
        r = self.root
        return r.M, r.M_at


def build_gmcs(columns: Sequence[Sequence[float]], m: int | None = None) -> GMcsTree:
    return GMcsTree(columns, m)


def update_gmcs(tree: GMcsTree, index: int, f: Sequence[float]) -> None:
    tree.update(index, f)


def query_gmcs(tree: GMcsTree) -> tuple[float, Witness]:
    """Best total over ``m`` contiguous blocks and its boundary tuple ``b_0..b_m``."""
    return tree.query()


def evaluate_boundaries(columns: Sequence[Sequence[float]], boundaries: Sequence[int]) -> float:
    """Direct sum of ``columns[r][j]`` over the blocks described by ``boundaries``."""
    total = 0.0
    for j in range(len(boundaries) - 1):
        for r in range(boundaries[j], boundaries[j + 1]):
            total += columns[r][j]
    return total
