"""Brute-force oracles. None of this imports the search or flow code under test."""

from __future__ import annotations

from itertools import combinations

import numpy as np

SUFFIX = 9


def bipartition_min_cut(n, edges, u, v):
    """min |delta(S)| over all S with u in S and v not in S."""
    others = [x for x in range(n) if x not in (u, v)]
    best = None
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            s = {u, *extra}
            size = sum(1 for a, b in edges if (a in s) != (b in s))
            best = size if best is None else min(best, size)
    return best


def brute_lambda_plus(n, edges):
    return max(bipartition_min_cut(n, edges, u, v) for u, v in combinations(range(n), 2))


def _extend(rows, tops, steps, k):
    for _ in range(steps):
        parts, ptops = [], []
        for c in range(k):
            keep = tops + 1 >= c
            if not keep.any():
                continue
            sel = rows[keep]
            parts.append(np.hstack([sel, np.full((len(sel), 1), c, dtype=np.int8)]))
            ptops.append(np.maximum(tops[keep], c))
        rows = np.vstack(parts)
        tops = np.concatenate(ptops)
    return rows


def rgs_chunks(m, k):
    """All length-m restricted growth strings over 0..k-1, in numpy chunks."""
    if m == 0:
        yield np.zeros((1, 0), dtype=np.int8)
        return
    head = max(1, m - SUFFIX)

    def prefixes(pre, top):
        if len(pre) == head:
            yield pre, top
            return
        for c in range(min(k, top + 2)):
            yield from prefixes(pre + [c], max(top, c))

    for pre, top in prefixes([0], 0):
        rows = np.array([pre], dtype=np.int8)
        yield _extend(rows, np.array([top], dtype=np.int8), m - head, k)


def _all_cuts(n, edges):
    out = []
    for mask in range(1 << (n - 1)):
        side = {0} | {x for x in range(1, n) if mask >> (x - 1) & 1}
        if len(side) == n:
            continue
        cut = [i for i, (a, b) in enumerate(edges) if (a in side) != (b in side)]
        pairs = [(a, b) for a, b in combinations(range(n), 2) if (a in side) != (b in side)]
        out.append((cut, pairs))
    return out


def _rainbow_rows(rows, cut):
    ok = np.ones(len(rows), dtype=bool)
    for i, j in combinations(cut, 2):
        ok &= rows[:, i] != rows[:, j]
    return ok


def brute_rd(n, edges, start=1):
    """Smallest k >= start such that some k-coloring rainbow-separates every pair.

    ``start`` may be raised to ``brute_lambda_plus`` for dense graphs; that value
    is a valid lower bound and is itself computed by exhaustive enumeration.
    """
    m = len(edges)
    cuts = _all_cuts(n, edges)
    pairs = list(combinations(range(n), 2))
    for k in range(start, m + 1):
        for rows in rgs_chunks(m, k):
            covered = {p: np.zeros(len(rows), dtype=bool) for p in pairs}
            for cut, sep in cuts:
                rb = _rainbow_rows(rows, cut)
                for p in sep:
                    covered[p] |= rb
            good = np.ones(len(rows), dtype=bool)
            for p in pairs:
                good &= covered[p]
            if good.any():
                return k
    raise AssertionError("unreachable for a connected graph")


def brute_chromatic_index(n, edges):
    m = len(edges)
    if m == 0:
        return 0
    adjacent = [(i, j) for i, j in combinations(range(m), 2) if set(edges[i]) & set(edges[j])]
    for k in range(1, m + 1):
        for rows in rgs_chunks(m, k):
            ok = np.ones(len(rows), dtype=bool)
            for i, j in adjacent:
                ok &= rows[:, i] != rows[:, j]
            if ok.any():
                return k
    raise AssertionError


def is_rainbow_disconnecting(n, edges, colors):
    """Scalar re-check of one coloring: every pair has some rainbow delta(S)."""
    for u, v in combinations(range(n), 2):
        others = [x for x in range(n) if x not in (u, v)]
        found = False
        for r in range(len(others) + 1):
            for extra in combinations(others, r):
                s = {u, *extra}
                cut = [colors[i] for i, (a, b) in enumerate(edges) if (a in s) != (b in s)]
                if len(cut) == len(set(cut)):
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


def reachable(n, edges, start, removed=()):
    gone = set(removed)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for i, (a, b) in enumerate(edges):
            if i in gone:
                continue
            for p, q in ((a, b), (b, a)):
                if p == x and q not in seen:
                    seen.add(q)
                    stack.append(q)
    return seen
