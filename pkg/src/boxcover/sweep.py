"""Line-sweep optimization driver.

For a case with an ``m x m`` activation matrix there are ``m + 1``
horizontal lines ``t_0 <= ... <= t_m`` (y-rank gap indices).  Every
nondecreasing choice of the first ``m`` is enumerated; the last line is
swept downwards, each step moving one point into strip ``m``, which is a
single leaf update of the generalized MCS-tree.

The bulk search runs in a compiled kernel that only tracks values.  The
winning setting is replayed through :class:`~boxcover.gmcs.GMcsTree` to
recover the block boundaries.  Ties are broken by case order, then by the
lexicographically smallest gap tuple, then by the smallest boundary tuple.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import numpy as np

from . import _kernel
from .cases import (MAX_K, ActivationCase, builtin_case, default_cases, realization_mode)
from .gmcs import GMcsTree
from .model import CoverageMode, Instance, Solution, check_gaps, realize_geometry

log = logging.getLogger(__name__)


class ConfigError(ValueError):
    """Inconsistent solver configuration (k too large, case size mismatch, ...)."""


@dataclass
class SolverConfig:
    k: int = 2
    mode: CoverageMode = CoverageMode.SYMMETRIC_DIFFERENCE
    cases: list[ActivationCase] | None = None
    workers: int = 1
    record_all_cases: bool = False
    allow_large_k: bool = False
    # "kernel" for the compiled search, "tree" to run everything through GMcsTree
    engine: str = "kernel"


@dataclass
class SweepResult:
    objective: float
    line_gaps: tuple[int, ...]
    block_boundaries: tuple[int, ...]


@dataclass
class SolveStats:
    settings: int = 0
    events: int = 0
    work_items: int = 0
    cases: int = 0
    per_case: dict[str, float] = field(default_factory=dict)


def column_table(instance: Instance, matrix: np.ndarray) -> np.ndarray:
    """table[p, i, j] = a[i-1, j] * w_p for strips i >= 1; strip 0 is all zeros."""
    a = np.asarray(matrix, dtype=float)
    m = a.shape[0]
    w = instance.weights
    table = np.zeros((instance.n, m + 1, m))
    table[:, 1:, :] = a[None, :, :] * w[:, None, None]
    return table


def _columns_for(instance: Instance, matrix: np.ndarray, gaps: Sequence[int]) -> list[list[float]]:
    m = matrix.shape[0]
    cols = []
    for i, p in enumerate(instance.points):
        r = instance.y_rank[i]
        strip = 0
        for s in range(1, len(gaps)):
            if gaps[s - 1] < r <= gaps[s]:
                strip = s
                break
        cols.append(list(matrix[strip - 1] * p.w) if strip else [0.0] * m)
    return cols


def sweep_one_setting(instance: Instance, case: ActivationCase, fixed_gaps: Sequence[int],
                      best: SweepResult | None = None) -> SweepResult | None:
    """Sweep the last line below ``fixed_gaps`` and keep the best state seen.

    ``best`` is returned unchanged unless some state beats it strictly.
    """
    a = case.array()
    m = case.m
    if len(fixed_gaps) != m:
        raise ConfigError(f"case {case.id} with m={m} needs {m} fixed gaps, got {len(fixed_gaps)}")
    fixed = check_gaps(fixed_gaps, instance.n)

    gaps = fixed + (fixed[-1],)
    tree = GMcsTree(_columns_for(instance, a, gaps), m)
    value, bounds = tree.query()
    if best is None or value > best.objective:
        best = SweepResult(value, gaps, bounds)
    by_y = instance.by_y_rank()
    for t in range(fixed[-1] + 1, instance.n + 1):
        p = by_y[t - 1]
        tree.update(p, a[m - 1] * instance.points[p].w)
        value, bounds = tree.query()
        if value > best.objective:
            best = SweepResult(value, fixed + (t,), bounds)
    return best


def fixed_prefixes(n: int, m: int) -> np.ndarray:
    """All nondecreasing ``m``-tuples over ``0..n`` in lexicographic order."""
    rows = list(itertools.combinations_with_replacement(range(n + 1), m))
    return np.array(rows, dtype=np.int64).reshape(len(rows), m)


def _resolve_cases(config: SolverConfig) -> list[ActivationCase]:
    if config.k < 1:
        raise ConfigError("k must be at least 1")
    if config.workers < 1:
        raise ConfigError("workers must be positive")
    if config.engine not in ("kernel", "tree"):
        raise ConfigError(f"unknown engine {config.engine!r}")
    if config.k > MAX_K and not config.allow_large_k:
        raise ConfigError(f"k={config.k} exceeds {MAX_K}; set allow_large_k to run anyway")
    if config.cases is not None:
        cases = list(config.cases)
        if not cases:
            raise ConfigError("empty case list")
    elif config.mode is CoverageMode.SINGLE_MATRIX:
        raise ConfigError("single-matrix mode needs an explicit case")
    else:
        cases = default_cases(config.k, config.mode, max_k=max(MAX_K, config.k))
    for c in cases:
        if config.mode is CoverageMode.SINGLE_MATRIX:
            continue
        if c.m != 2 * config.k - 1:
            raise ConfigError(f"case {c.id} has m={c.m}, expected {2 * config.k - 1} for k={config.k}")
    return cases


def _kernel_values(instance: Instance, cases: list[ActivationCase], workers: int,
                   chunk: int = 2048) -> list[np.ndarray]:
    y_rank = np.array(instance.y_rank, dtype=np.int64)
    by_y = np.array(instance.by_y_rank(), dtype=np.int64)
    tables = [column_table(instance, c.array()) for c in cases]
    prefixes = {m: fixed_prefixes(instance.n, m) for m in {c.m for c in cases}}
    results = [np.empty(len(prefixes[c.m])) for c in cases]

    items = []
    for ci, c in enumerate(cases):
        P = prefixes[c.m]
        for lo in range(0, len(P), chunk):
            items.append((ci, lo, min(lo + chunk, len(P))))

    def run(item):
        ci, lo, hi = item
        _kernel.best_per_prefix(tables[ci], y_rank, by_y, prefixes[cases[ci].m][lo:hi],
                                results[ci][lo:hi])

    if workers == 1:
        for item in items:
            run(item)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, items))
    return results


def _tree_values(instance: Instance, cases: list[ActivationCase]) -> list[np.ndarray]:
    results = []
    for c in cases:
        P = fixed_prefixes(instance.n, c.m)
        vals = np.empty(len(P))
        for q, row in enumerate(P):
            vals[q] = sweep_one_setting(instance, c, tuple(int(v) for v in row)).objective
        results.append(vals)
    return results


def solve(instance: Instance, config: SolverConfig | None = None) -> Solution:
    """Best placement over every case and every line setting.

    Runs in ``O(C n^{m+1} log n)`` for ``C`` cases of size ``m``; for two
    boxes that is ``O(n^4 log n)`` with 18 cases.
    """
    config = config or SolverConfig()
    cases = _resolve_cases(config)

    # cases with equal matrices give equal values; only the first in order can win
    distinct: dict[bytes, int] = {}
    for ci, c in enumerate(cases):
        distinct.setdefault(c.array().tobytes(), ci)
    runs = sorted(set(distinct.values()))
    run_cases = [cases[ci] for ci in runs]

    if config.engine == "kernel":
        values = _kernel_values(instance, run_cases, config.workers)
    else:
        values = _tree_values(instance, run_cases)

    best_val, best_run, best_q = -np.inf, -1, -1
    for ri, vals in enumerate(values):
        q = int(np.argmax(vals))
        if vals[q] > best_val:
            best_val, best_run, best_q = vals[q], ri, q
    case = run_cases[best_run]
    prefix = tuple(int(v) for v in fixed_prefixes(instance.n, case.m)[best_q])
    sweep = sweep_one_setting(instance, case, prefix)

    stats = SolveStats(cases=len(cases))
    for c, vals in zip(run_cases, values):
        P = fixed_prefixes(instance.n, c.m)
        stats.settings += len(P)
        stats.events += int((instance.n - P[:, -1]).sum()) if len(P) else 0
        stats.per_case[c.id] = float(vals.max())
    stats.work_items = sum(-(-comb(instance.n + c.m, c.m) // 2048) for c in run_cases)
    log.debug("solved n=%d over %d cases: %s", instance.n, len(cases), stats)

    boxes = []
    if config.mode is not CoverageMode.SINGLE_MATRIX:
        boxes = realize_geometry(instance, case, sweep.line_gaps, sweep.block_boundaries)
    sol = Solution(
        objective=float(sweep.objective),
        case_id=case.id,
        line_gaps=sweep.line_gaps,
        block_boundaries=tuple(int(b) for b in sweep.block_boundaries),
        boxes=boxes,
        mode=config.mode,
        matrix=case.matrix,
    )
    if config.record_all_cases:
        # duplicates share the value of their representative
        sol.case_objectives = {
            c.id: stats.per_case[cases[distinct[c.array().tobytes()]].id] for c in cases
        }
    sol.stats = stats
    return sol


def solve_single_box(instance: Instance, workers: int = 1) -> Solution:
    return solve(instance, SolverConfig(k=1, mode=CoverageMode.SYMMETRIC_DIFFERENCE, workers=workers))


def solve_shape(instance: Instance, name: str, workers: int = 1) -> Solution:
    """Best cross or annulus placement, with the shape's two boxes realized.

    The annulus comes back as outer and inner box (symmetric difference),
    the cross as vertical and horizontal bar (union).
    """
    case = builtin_case(name)
    sol = solve(instance, SolverConfig(k=2, mode=CoverageMode.SINGLE_MATRIX, cases=[case],
                                       workers=workers))
    sol.mode = realization_mode(case)
    sol.boxes = realize_geometry(instance, case, sol.line_gaps, sol.block_boundaries)
    sol.shape = name
    return sol
