"""Sector activation matrices and their box decompositions.

With ``k`` boxes there are ``2k`` horizontal lines (labels ``0..2k-1`` top to
bottom) and ``2k`` vertical boundaries (``0..2k-1`` left to right), cutting
the plane into an ``m x m`` sector grid, ``m = 2k - 1``.  A box is a pair of
lines ``(a, b)`` and a pair of boundaries ``(c, d)``, covering rows
``a+1..b`` and columns ``c+1..d`` (1-based).  Pairing the lines, pairing the
boundaries and matching the two pairings gives every relative placement of
``k`` boxes.
"""

from __future__ import annotations

import itertools
import re
import warnings
from dataclasses import dataclass
from math import factorial
from typing import Iterator

import numpy as np

from .model import CoverageMode

MAX_K = 3


@dataclass(frozen=True)
class IntervalRect:
    row_lo: int
    row_hi: int
    col_lo: int
    col_hi: int

    def indicator(self, m: int) -> np.ndarray:
        a = np.zeros((m, m), dtype=np.int64)
        a[self.row_lo - 1:self.row_hi, self.col_lo - 1:self.col_hi] = 1
        return a


@dataclass(frozen=True)
class ActivationCase:
    id: str
    m: int
    matrix: tuple[tuple[float, ...], ...]
    decomposition: tuple[IntervalRect, ...]
    mode: CoverageMode

    @property
    def k(self) -> int:
        return len(self.decomposition) if self.decomposition else (self.m + 1) // 2

    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=float).reshape(self.m, self.m)


def _as_tuple(a) -> tuple[tuple[float, ...], ...]:
    return tuple(tuple(float(v) for v in row) for row in np.asarray(a))


def pairings(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    """All perfect pairings of ``items``, each pair in increasing order."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for tail in pairings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + tail


def double_factorial(n: int) -> int:
    return 1 if n <= 1 else n * double_factorial(n - 2)


def configuration_count(k: int) -> int:
    """Number of (row pairing, column pairing, matching) configurations."""
    return factorial(k) * double_factorial(2 * k - 1) ** 2


def configurations(k: int) -> Iterator[tuple[str, tuple[IntervalRect, ...]]]:
    """Raw configurations in a fixed order, as ``(tag, rectangles)``.

    The tag ``r{p}-c{q}-x{b}`` names the row pairing, column pairing and
    matching by their enumeration indices.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    labels = list(range(2 * k))
    row_pairings = list(pairings(labels))
    col_pairings = list(pairings(labels))
    matchings = list(itertools.permutations(range(k)))
    for p, rows in enumerate(row_pairings):
        for q, cols in enumerate(col_pairings):
            for b, perm in enumerate(matchings):
                rects = tuple(
                    IntervalRect(rows[i][0] + 1, rows[i][1], cols[perm[i]][0] + 1, cols[perm[i]][1])
                    for i in range(k)
                )
                yield f"r{p}-c{q}-x{b}", rects


def combine(rects, m: int, mode: CoverageMode) -> np.ndarray:
    acc = np.zeros((m, m), dtype=np.int64)
    for r in rects:
        if mode is CoverageMode.SYMMETRIC_DIFFERENCE:
            acc ^= r.indicator(m)
        else:
            acc |= r.indicator(m)
    return acc


def _check_k(k: int, max_k: int) -> None:
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > max_k:
        raise ValueError(f"case enumeration is limited to k <= {max_k}")


def canonical_symdiff_cases(k: int, max_k: int = MAX_K) -> list[ActivationCase]:
    """All symmetric-difference cases for ``k`` boxes, in enumeration order."""
    _check_k(k, max_k)
    m = 2 * k - 1
    seen = set()
    out = []
    for tag, rects in configurations(k):
        mat = combine(rects, m, CoverageMode.SYMMETRIC_DIFFERENCE)
        key = (mat.tobytes(), frozenset(rects))
        if key in seen:
            continue
        seen.add(key)
        out.append(ActivationCase(f"sd{k}-{tag}", m, _as_tuple(mat), rects,
                                  CoverageMode.SYMMETRIC_DIFFERENCE))
    return out


def union_cases(k: int, max_k: int = MAX_K) -> list[ActivationCase]:
    """Union cases for ``k`` boxes, one representative per distinct matrix."""
    _check_k(k, max_k)
    m = 2 * k - 1
    seen = set()
    out = []
    for tag, rects in configurations(k):
        mat = combine(rects, m, CoverageMode.UNION)
        if mat.tobytes() in seen:
            continue
        seen.add(mat.tobytes())
        out.append(ActivationCase(f"un{k}-{tag}", m, _as_tuple(mat), rects, CoverageMode.UNION))
    return out


def default_cases(k: int, mode: CoverageMode, max_k: int = MAX_K) -> list[ActivationCase]:
    if mode is CoverageMode.SYMMETRIC_DIFFERENCE:
        return canonical_symdiff_cases(k, max_k)
    if mode is CoverageMode.UNION:
        return union_cases(k, max_k)
    raise ValueError("single-matrix mode has no default case list")


_BUILTINS = {
    # vertical bar over all rows of column 2, horizontal bar over all columns of row 2
    "cross": (((0, 1, 0), (1, 1, 1), (0, 1, 0)),
              (IntervalRect(1, 3, 2, 2), IntervalRect(2, 2, 1, 3))),
    # outer box minus a nested inner box
    "annulus": (((1, 1, 1), (1, 0, 1), (1, 1, 1)),
                (IntervalRect(1, 3, 1, 3), IntervalRect(2, 2, 2, 2))),
}


def builtin_case(name: str) -> ActivationCase:
    try:
        mat, rects = _BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown shape {name!r}; expected one of {sorted(_BUILTINS)}") from None
    return ActivationCase(name, 3, _as_tuple(mat), rects, CoverageMode.SINGLE_MATRIX)


def realization_mode(case: ActivationCase) -> CoverageMode | None:
    """Combinator under which the decomposition rebuilds the matrix, if any."""
    if not case.decomposition:
        return None
    target = case.array()
    for mode in (CoverageMode.SYMMETRIC_DIFFERENCE, CoverageMode.UNION):
        if np.array_equal(combine(case.decomposition, case.m, mode), target):
            return mode
    return None


def verify_case(case: ActivationCase) -> bool:
    """True iff the decomposition rebuilds the matrix under the case's mode."""
    try:
        if case.mode is CoverageMode.SINGLE_MATRIX:
            return realization_mode(case) is not None
        for r in case.decomposition:
            if not (1 <= r.row_lo <= r.row_hi <= case.m and 1 <= r.col_lo <= r.col_hi <= case.m):
                return False
        return bool(np.array_equal(combine(case.decomposition, case.m, case.mode), case.array()))
    except Exception:
        return False


def parse_matrix(text: str, case_id: str = "matrix") -> ActivationCase:
    """Parse a square matrix; rows split by newlines or '/', entries by spaces or commas."""
    rows = []
    for line in re.split(r"[\n/]", text):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([float(tok) for tok in re.split(r"[,\s]+", line) if tok])
        except ValueError:
            raise ValueError(f"non-numeric matrix row: {line!r}") from None
    m = len(rows)
    if m == 0 or any(len(r) != m for r in rows):
        raise ValueError(f"matrix is not square: row lengths {[len(r) for r in rows]}")
    if not np.all(np.isfinite(rows)):
        raise ValueError("matrix entries must be finite")
    if m % 2 == 0:
        warnings.warn(f"matrix size {m} is even; it does not correspond to a whole number of boxes")
    return ActivationCase(case_id, m, _as_tuple(rows), (), CoverageMode.SINGLE_MATRIX)
