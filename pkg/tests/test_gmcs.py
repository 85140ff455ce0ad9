import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from boxcover.gmcs import (GMcsTree, build_gmcs, empty_summary, evaluate_boundaries, leaf_summary,
                           merge_gmcs, query_gmcs, update_gmcs)
from boxcover.mcs import build_mcs, leaf, merge_mcs
from boxcover.oracle import brute_force_1d


def enumerate_1d(rows, m):
    """Independent check: every nondecreasing boundary tuple, plain double loop."""
    n = len(rows)
    best = 0
    for b in itertools.combinations_with_replacement(range(n + 1), m + 1):
        best = max(best, sum(rows[r][j] for j in range(m) for r in range(b[j], b[j + 1])))
    return best


def test_leaf_summary_examples():
    s = leaf_summary([5, -1, 2])
    assert s.S[0][0] == 5 and s.S[1][1] == -1 and s.S[0][2] == 5 and s.S[1][2] == 2
    assert s.M == 5
    assert s.value_count == 13 and len(s.values()) == 13

    s = leaf_summary([-1, -1, -1])
    assert all(s.S[i][j] == -1 for i in range(3) for j in range(i, 3))
    assert s.L == [0, 0, 0] and s.R == [0, 0, 0] and s.M == 0

    for w in (-3, 0, 4):
        g = leaf_summary([w])
        c = leaf(w)
        assert (g.S[0][0], g.L[0], g.M, g.R[0]) == c.values()


def test_leaf_summary_rejects_empty():
    with pytest.raises(ValueError):
        leaf_summary([])


def test_merge_examples():
    left, right = leaf_summary([1, -10, -10], 0), leaf_summary([-10, 2, -10], 1)
    assert enumerate_1d([[1, -10, -10], [-10, 2, -10]], 3) == 3
    merged = merge_gmcs(left, right)
    assert merged.M == 3
    assert merged.M_at == (0, 1, 2, 2)

    e = empty_summary(3, 1)
    m2 = merge_gmcs(left, e)
    assert m2.M == left.M and m2.L == left.L

    with pytest.raises(ValueError):
        merge_gmcs(left, leaf_summary([1]))


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=2))
def test_m1_merge_matches_classic(ws):
    g = merge_gmcs(leaf_summary([ws[0]], 0), leaf_summary([ws[1]], 1))
    c = merge_mcs(leaf(ws[0], 0), leaf(ws[1], 1))
    assert (g.S[0][0], g.L[0], g.M, g.R[0]) == c.values()


def test_build_and_query_examples():
    rows = [(1, -10, -10), (-10, 2, -10), (-10, -10, 3)]
    assert enumerate_1d(rows, 3) == 6
    assert query_gmcs(build_gmcs(rows)) == (6, (0, 1, 2, 3))

    assert query_gmcs(build_gmcs([(-1, -2, -3)] * 4))[0] == 0
    assert query_gmcs(build_gmcs([], m=3)) == (0, (0, 0, 0, 0))

    M, b = query_gmcs(build_gmcs([(0, 7, 0)]))
    assert M == 7 and evaluate_boundaries([(0, 7, 0)], b) == 7


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        build_gmcs([(1, 2, 3), (1, 2)])
    with pytest.raises(ValueError):
        build_gmcs([])


def test_update_examples():
    tree = build_gmcs([(0, 0, 0), (0, 0, 0)])
    update_gmcs(tree, 0, (4, 0, 0))
    assert enumerate_1d([(4, 0, 0), (0, 0, 0)], 3) == 4
    assert query_gmcs(tree)[0] == 4

    tree = build_gmcs([(1, -10, -10), (-10, 2, -10)])
    update_gmcs(tree, 1, (-10, -10, -10))
    assert enumerate_1d([(1, -10, -10), (-10, -10, -10)], 3) == 1
    assert query_gmcs(tree)[0] == 1

    before = [n.values() for n in tree.nodes[1:]]
    update_gmcs(tree, 0, (1, -10, -10))
    assert [n.values() for n in tree.nodes[1:]] == before

    with pytest.raises(IndexError):
        update_gmcs(tree, 2, (0, 0, 0))
    with pytest.raises(ValueError):
        update_gmcs(tree, 0, (0, 0))


def test_oracle_equivalence_with_witness():
    rng = random.Random(2)
    for _ in range(300):
        n, m = rng.randint(0, 10), rng.choice([1, 2, 3, 5])
        rows = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
        M, b = query_gmcs(build_gmcs(rows, m))
        ref, ref_b = brute_force_1d(rows, m)
        assert M == ref
        assert evaluate_boundaries(rows, b) == M
        # stored witnesses compose to the lexicographically smallest maximizer
        assert b == ref_b


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(0, 12), st.integers(0, 2**32))
def test_update_matches_rebuild(m, n, seed):
    rng = random.Random(seed)
    rows = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
    tree = build_gmcs(rows, m)
    for _ in range(10 if n else 0):
        i = rng.randrange(n)
        rows[i] = [rng.randint(-9, 9) for _ in range(m)]
        update_gmcs(tree, i, rows[i])
    fresh = build_gmcs(rows, m)
    assert [v.values() for v in tree.nodes[1:]] == [v.values() for v in fresh.nodes[1:]]
    assert [v.M_at for v in tree.nodes[1:]] == [v.M_at for v in fresh.nodes[1:]]


@settings(max_examples=80)
@given(st.lists(st.integers(-9, 9), max_size=40))
def test_m1_tree_matches_classic(seq):
    g = build_gmcs([[w] for w in seq], 1)
    c = build_mcs(seq)
    assert query_gmcs(g)[0] == c.query()[0]
    for gv, cv in zip(g.nodes[1:], c.nodes[1:]):
        assert (gv.S[0][0], gv.L[0], gv.M, gv.R[0]) == cv.values()


@pytest.mark.parametrize("m", [1, 3, 5])
def test_merge_count(m):
    """n - 1 merges to build over a power-of-two length, log2(n) per update."""
    tree = GMcsTree([[1.0] * m] * 16, m)
    assert tree.merges == 15
    tree.update(3, [0.0] * m)
    assert tree.merges == 15 + 4


def test_summary_nonnegative():
    rng = random.Random(5)
    rows = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(9)]
    for node in build_gmcs(rows).nodes[1:]:
        assert node.M >= 0 and min(node.L) >= 0 and min(node.R) >= 0
