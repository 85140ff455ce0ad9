import itertools
import random

import numpy as np
import pytest

from boxcover import (CoverageMode, SolverConfig, canonical_symdiff_cases, parse_matrix,
                      region_weight, solve, solve_shape, solve_single_box, sweep_one_setting,
                      validate_instance)
from boxcover.cases import ActivationCase, combine, configurations, union_cases
from boxcover.gmcs import GMcsTree
from boxcover.model import matrix_weight
from boxcover.oracle import brute_force_k_box, brute_force_shape, brute_force_single_box
from boxcover.sweep import ConfigError, _columns_for, fixed_prefixes

from conftest import random_instance

SD, UN = CoverageMode.SYMMETRIC_DIFFERENCE, CoverageMode.UNION


def test_sweep_one_setting_examples(diagonal):
    neg = validate_instance([(0, 0, -1), (1, 1, -2)])
    case = canonical_symdiff_cases(2)[0]
    assert sweep_one_setting(neg, case, (0, 0, 1)).objective == 0

    one = validate_instance([(0, 0, 5)])
    (k1,) = canonical_symdiff_cases(1)
    res = sweep_one_setting(one, k1, (0,))
    assert res.objective == 5 and res.line_gaps == (0, 1)

    # row 1 is the top strip, so the diagonal ends sit in the anti-diagonal corners
    disjoint = next(c for c in canonical_symdiff_cases(2)
                    if c.matrix == ((0.0, 0.0, 1.0), (0.0, 0.0, 0.0), (1.0, 0.0, 0.0)))
    best = max(sweep_one_setting(diagonal, disjoint, tuple(map(int, p))).objective
               for p in fixed_prefixes(4, 3))
    assert best == 3 == brute_force_k_box(diagonal, 2, SD)


def test_sweep_one_setting_rejects_wrong_length(diagonal):
    with pytest.raises(ConfigError):
        sweep_one_setting(diagonal, canonical_symdiff_cases(2)[0], (0, 1))


def test_sweep_keeps_incoming_best(diagonal):
    case = canonical_symdiff_cases(2)[0]
    prior = sweep_one_setting(diagonal, case, (0, 0, 0))
    prior.objective = 100
    assert sweep_one_setting(diagonal, case, (0, 1, 2), prior) is prior


def test_solve_examples(diagonal):
    sol = solve(diagonal)
    assert sol.objective == 3
    assert region_weight(diagonal, sol.boxes, SD) == 3
    assert solve_single_box(diagonal).objective == 2
    single_neg = solve_single_box(validate_instance([(0, 0, -3)]))
    assert single_neg.objective == 0 and all(b.empty for b in single_neg.boxes)
    pos = validate_instance([(0, 2, 1), (1, 0, 4), (2, 1, 3)])
    assert solve_single_box(pos).objective == 8
    assert solve(pos, SolverConfig(mode=UN)).objective == 8


def test_solve_empty_instance():
    empty = validate_instance([])
    for mode in (SD, UN):
        sol = solve(empty, SolverConfig(mode=mode))
        assert sol.objective == 0 and sol.line_gaps == (0, 0, 0, 0)


def test_solve_shape_examples(ring):
    sol = solve_shape(ring, "annulus")
    assert sol.objective == 4 == brute_force_shape(ring, "annulus")
    assert sol.shape == "annulus" and sol.mode is SD
    assert region_weight(ring, sol.boxes, sol.mode) == 4
    one = validate_instance([(3, 4, 6)])
    assert solve_shape(one, "cross").objective == 6
    neg = validate_instance([(0, 0, -1), (1, 2, -4), (2, 1, -2)])
    assert solve_shape(neg, "annulus").objective == 0
    with pytest.raises(ValueError):
        solve_shape(ring, "star")


def test_config_errors(diagonal):
    with pytest.raises(ConfigError):
        solve(diagonal, SolverConfig(k=4))
    with pytest.raises(ConfigError):
        solve(diagonal, SolverConfig(k=2, cases=canonical_symdiff_cases(1)))
    with pytest.raises(ConfigError):
        solve(diagonal, SolverConfig(mode=CoverageMode.SINGLE_MATRIX))
    with pytest.raises(ConfigError):
        solve(diagonal, SolverConfig(workers=0))


def test_large_k_override_runs():
    inst = validate_instance([(0, 0, 1), (1, 1, -1), (2, 2, 1)])
    # one k=4 configuration keeps the runtime small
    tag, rects = next(configurations(4))
    case = ActivationCase(f"sd4-{tag}", 7, tuple(map(tuple, combine(rects, 7, SD).astype(float))),
                          rects, SD)
    with pytest.raises(ConfigError):
        solve(inst, SolverConfig(k=4, cases=[case]))
    sol = solve(inst, SolverConfig(k=4, cases=[case], allow_large_k=True))
    assert sol.objective == matrix_oracle(inst, case.matrix)


def matrix_oracle(inst, matrix):
    """Every gap tuple against every boundary tuple, scored directly."""
    m = len(matrix)
    tuples = list(itertools.combinations_with_replacement(range(inst.n + 1), m + 1))
    return max(matrix_weight(inst, matrix, g, b) for g in tuples for b in tuples)


def test_matrix_mode_weighted(diagonal):
    case = parse_matrix("2 0 0 / 0 0 0 / 0 0 -1")
    sol = solve(diagonal, SolverConfig(mode=CoverageMode.SINGLE_MATRIX, cases=[case]))
    assert sol.boxes == []
    assert sol.objective == matrix_weight(diagonal, case.matrix, sol.line_gaps, sol.block_boundaries)
    assert sol.objective == matrix_oracle(diagonal, case.matrix)


def test_even_matrix_mode():
    inst = validate_instance([(0, 0, 1), (1, 1, -2), (2, 2, 3)])
    with pytest.warns(UserWarning):
        case = parse_matrix("1 0 / 0 1")
    sol = solve(inst, SolverConfig(mode=CoverageMode.SINGLE_MATRIX, cases=[case]))
    assert len(sol.line_gaps) == 3 and len(sol.block_boundaries) == 3
    assert sol.objective == matrix_oracle(inst, case.matrix)


def test_kernel_matches_tree_engine():
    rng = random.Random(21)
    for _ in range(6):
        inst = random_instance(rng, rng.randint(0, 6))
        for mode in (SD, UN):
            a = solve(inst, SolverConfig(mode=mode))
            b = solve(inst, SolverConfig(mode=mode, engine="tree"))
            assert a == b


def test_tie_break_order(diagonal):
    sol = solve(diagonal, SolverConfig(record_all_cases=True))
    best = max(sol.case_objectives.values())
    winners = [cid for cid, v in sol.case_objectives.items() if v == best]
    assert sol.case_id == winners[0]
    case = next(c for c in canonical_symdiff_cases(2) if c.id == sol.case_id)
    # no smaller gap tuple reaches the optimum for the winning case
    for p in fixed_prefixes(diagonal.n, 3):
        prefix = tuple(int(v) for v in p)
        if prefix + (diagonal.n,) >= sol.line_gaps:
            break
        res = sweep_one_setting(diagonal, case, prefix)
        assert res.objective < best or res.line_gaps >= sol.line_gaps


def test_worker_count_does_not_change_solution():
    rng = random.Random(22)
    inst = random_instance(rng, 14)
    assert solve(inst, SolverConfig(workers=1)) == solve(inst, SolverConfig(workers=3))


def test_random_oracle_equivalence_small():
    rng = random.Random(23)
    for _ in range(40):
        inst = random_instance(rng, rng.randint(0, 8))
        for mode in (SD, UN):
            sol = solve(inst, SolverConfig(mode=mode))
            assert sol.objective == brute_force_k_box(inst, 2, mode)
            assert region_weight(inst, sol.boxes, mode) == sol.objective
        assert solve_single_box(inst).objective == brute_force_single_box(inst)
        for name in ("cross", "annulus"):
            sol = solve_shape(inst, name)
            assert sol.objective == brute_force_shape(inst, name)
            assert region_weight(inst, sol.boxes, sol.mode) == sol.objective


def test_deleting_negative_point_never_hurts():
    rng = random.Random(24)
    for _ in range(15):
        inst = random_instance(rng, rng.randint(2, 9))
        negatives = [i for i, p in enumerate(inst.points) if p.w < 0]
        if not negatives:
            continue
        drop = rng.choice(negatives)
        smaller = validate_instance([(p.x, p.y, p.w) for i, p in enumerate(inst.points) if i != drop])
        for mode in (SD, UN):
            assert solve(smaller, SolverConfig(mode=mode)).objective >= solve(inst, SolverConfig(mode=mode)).objective


def test_sweep_state_matches_fresh_build():
    rng = random.Random(25)
    cases = canonical_symdiff_cases(2)
    for _ in range(50):
        inst = random_instance(rng, rng.randint(1, 10))
        case = rng.choice(cases)
        a = case.array()
        n = inst.n
        prefix = tuple(sorted(rng.randint(0, n) for _ in range(3)))
        target = rng.randint(prefix[-1], n)
        tree = GMcsTree(_columns_for(inst, a, prefix + (prefix[-1],)), 3)
        by_y = inst.by_y_rank()
        for t in range(prefix[-1] + 1, target + 1):
            p = by_y[t - 1]
            tree.update(p, a[2] * inst.points[p].w)
        fresh = GMcsTree(_columns_for(inst, a, prefix + (target,)), 3)
        assert [v.values() for v in tree.nodes[1:]] == [v.values() for v in fresh.nodes[1:]]


def test_real_weights_self_consistent():
    rng = np.random.default_rng(26)
    pts = list(zip(rng.permutation(30) * 1.0, rng.permutation(30) * 1.0, rng.normal(size=30)))
    inst = validate_instance(pts)
    tol = 1e-9 * float(np.abs(inst.weights).sum())
    for mode in (SD, UN):
        sol = solve(inst, SolverConfig(mode=mode))
        assert abs(region_weight(inst, sol.boxes, mode) - sol.objective) <= tol


def test_union_dedup_does_not_change_optimum():
    rng = random.Random(27)
    inst = random_instance(rng, 7)
    assert len(union_cases(2)) == 18
    assert solve(inst, SolverConfig(mode=UN)).objective == brute_force_k_box(inst, 2, UN)
