"""Rainbow vertex-disconnection colorings and rvd(G)."""

from __future__ import annotations

import dataclasses
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from .coloring import BudgetExceeded
from .config import Budgets, DEFAULT_BUDGETS
from .cover import cover_search
from .graph import Graph, GraphError, is_connected


@dataclasses.dataclass(frozen=True)
class VertexColoring:
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        for c in self.colors:
            if not 1 <= c <= self.k:
                raise GraphError(f"color {c} outside 1..{self.k}")


def _adj_masks(g: Graph) -> list[int]:
    adj = [0] * g.n
    for a, b in g.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def _separated(adj: list[int], x: int, y: int, removed: int, skip_xy: bool) -> bool:
    """Is y unreachable from x once ``removed`` vertices (and edge xy if skip_xy) are gone?"""
    seen = 1 << x
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        v = low.bit_length() - 1
        nb = adj[v] & ~removed & ~seen
        if skip_xy and v == x:
            nb &= ~(1 << y)
        if nb >> y & 1:
            return False
        seen |= nb
        frontier |= nb
    return True


def is_vertex_cut(g: Graph, s: Sequence[int], x: int, y: int) -> bool:
    """S is an x-y vertex cut (in G - xy when x and y are adjacent)."""
    removed = 0
    for v in s:
        if v in (x, y):
            return False
        removed |= 1 << v
    return _separated(_adj_masks(g), x, y, removed, g.has_edge(x, y))


def _distinct(colors, vs) -> bool:
    seen = [colors[v] for v in vs]
    return len(set(seen)) == len(seen)


def exists_rainbow_vertex_cut(g: Graph, c: VertexColoring, x: int, y: int) -> Optional[frozenset[int]]:
    """An x-y rainbow vertex cut S, or None.

    For adjacent x, y the cut is taken in G - xy and S+x or S+y must be rainbow.
    """
    if x == y:
        raise GraphError("x and y must differ")
    adj = _adj_masks(g)
    adjacent = g.has_edge(x, y)
    others = [v for v in g.vertices() if v not in (x, y)]
    for mask in range(1 << len(others)):
        s = [others[i] for i in range(len(others)) if mask >> i & 1]
        removed = sum(1 << v for v in s)
        if not _separated(adj, x, y, removed, adjacent):
            continue
        if adjacent:
            ok = _distinct(c.colors, s + [x]) or _distinct(c.colors, s + [y])
        else:
            ok = _distinct(c.colors, s)
        if ok:
            return frozenset(s)
    return None


def verify_rvd_coloring(g: Graph, c: VertexColoring) -> bool:
    if len(c.colors) != g.n:
        raise GraphError("coloring does not match the vertex count")
    return all(exists_rainbow_vertex_cut(g, c, x, y) is not None
               for x, y in combinations(range(g.n), 2))


@lru_cache(maxsize=1024)
def _candidates(g: Graph) -> tuple[tuple[int, int], ...]:
    """(vertex set that must be rainbow, pair bit) over inclusion-minimal x-y cuts."""
    adj = _adj_masks(g)
    out = []
    for p, (x, y) in enumerate(combinations(range(g.n), 2)):
        adjacent = g.has_edge(x, y)
        others = [v for v in range(g.n) if v not in (x, y)]
        cuts = []
        for mask in range(1 << len(others)):
            removed = 0
            for i in range(len(others)):
                if mask >> i & 1:
                    removed |= 1 << others[i]
            if _separated(adj, x, y, removed, adjacent):
                cuts.append(removed)
        minimal = [s for s in cuts if not any(t != s and t & s == t for t in cuts)]
        for s in minimal:
            if adjacent:
                out.append((s | 1 << x, 1 << p))
                out.append((s | 1 << y, 1 << p))
            else:
                out.append((s, 1 << p))
    return tuple(out)


def rvd_coloring_with(g: Graph, k: int, node_limit: Optional[int] = None) -> Optional[VertexColoring]:
    n_pairs = g.n * (g.n - 1) // 2
    res = cover_search(g.n, _candidates(g), n_pairs, k, node_limit)
    return None if res is None else VertexColoring(k, tuple(res))


@dataclasses.dataclass(frozen=True)
class RvdResult:
    lower: int
    upper: Optional[int]
    witness: Optional[VertexColoring]

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None

    def to_json(self):
        return self.value if self.exact else [self.lower, self.upper]


def rvd_exact(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> RvdResult:
    """Smallest k admitting a rainbow vertex-disconnection coloring."""
    if not is_connected(g):
        raise GraphError("rvd needs a connected graph")
    if g.n < 2:
        # no pairs to separate, but a coloring of one vertex still spends a color
        return RvdResult(g.n, g.n, VertexColoring(1, (1,) * g.n))
    if g.n > budgets.max_rvd_vertices:
        return RvdResult(1, g.n, VertexColoring(g.n, tuple(range(1, g.n + 1))))
    for k in range(1, g.n + 1):
        try:
            res = rvd_coloring_with(g, k, budgets.max_nodes)
        except BudgetExceeded:
            return RvdResult(k, g.n, VertexColoring(g.n, tuple(range(1, g.n + 1))))
        if res is not None:
            assert verify_rvd_coloring(g, res), "rvd witness failed verification"
            return RvdResult(k, k, res)
    raise AssertionError("all-distinct vertex coloring should always succeed")


def rvd_complete_formula(n: int) -> int:
    return n - 1 if n in (2, 3) else n
