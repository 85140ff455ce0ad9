"""Compiled value-only sweep over many line settings.

Same recursions as :mod:`boxcover.gmcs` on flat arrays, without witnesses.
The solver uses it to find the best setting, then replays that one setting
through the witness-carrying tree.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _set_leaf(S, L, R, M, v, f, m):
    for s in range(m):
        run = f[s]
        S[v, s, s] = run
        for e in range(s + 1, m):
            if f[e] > run:
                run = f[e]
            S[v, s, e] = run
    run = 0.0
    for s in range(m - 1, -1, -1):
        if f[s] > run:
            run = f[s]
        L[v, s] = run
    run = 0.0
    for e in range(m):
        if f[e] > run:
            run = f[e]
        R[v, e] = run
    M[v] = run


@njit(cache=True, nogil=True)
def _set_empty(S, L, R, M, v, m):
    for s in range(m):
        for e in range(s, m):
            S[v, s, e] = 0.0
        L[v, s] = 0.0
        R[v, s] = 0.0
    M[v] = 0.0


@njit(cache=True, nogil=True)
def _merge(S, L, R, M, v, m):
    a = 2 * v
    b = a + 1
    for s in range(m):
        for e in range(s, m):
            best = S[a, s, s] + S[b, s, e]
            for i in range(s + 1, e + 1):
                c = S[a, s, i] + S[b, i, e]
                if c > best:
                    best = c
            S[v, s, e] = best
    for s in range(m):
        best = L[a, s]
        for i in range(s, m):
            c = S[a, s, i] + L[b, i]
            if c > best:
                best = c
        L[v, s] = best
    for e in range(m):
        best = R[b, e]
        for i in range(e + 1):
            c = R[a, i] + S[b, i, e]
            if c > best:
                best = c
        R[v, e] = best
    best = M[a]
    if M[b] > best:
        best = M[b]
    for i in range(m):
        c = R[a, i] + L[b, i]
        if c > best:
            best = c
    M[v] = best


@njit(cache=True, nogil=True)
def best_per_prefix(table, y_rank, by_y, prefixes, out):
    """For every fixed-line prefix, best root value over the sweep of the last line.

    table[p, i, :] holds the column weights of point p when it sits in strip
    i (strip 0 means outside, all zeros).  Each row of ``prefixes`` is
    ``t_0..t_{m-1}``; the swept line ``t_m`` runs from ``t_{m-1}`` to ``n``.
    """
    n = table.shape[0]
    m = table.shape[2]
    size = 1
    while size < max(n, 1):
        size *= 2
    S = np.full((2 * size, m, m), -np.inf)
    L = np.zeros((2 * size, m))
    R = np.zeros((2 * size, m))
    M = np.zeros(2 * size)
    for v in range(size + n, 2 * size):
        _set_empty(S, L, R, M, v, m)

    for q in range(prefixes.shape[0]):
        t = prefixes[q]
        for p in range(n):
            r = y_rank[p]
            strip = 0
            for i in range(1, m):
                if t[i - 1] < r <= t[i]:
                    strip = i
                    break
            _set_leaf(S, L, R, M, size + p, table[p, strip], m)
        for v in range(size - 1, 0, -1):
            _merge(S, L, R, M, v, m)
        best = M[1]
        for r in range(t[m - 1] + 1, n + 1):
            p = by_y[r - 1]
            v = size + p
            _set_leaf(S, L, R, M, v, table[p, m], m)
            v //= 2
            while v > 0:
                _merge(S, L, R, M, v, m)
                v //= 2
            if M[1] > best:
                best = M[1]
        out[q] = best
