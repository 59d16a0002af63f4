"""Proper edge colorings and the chromatic index."""

from __future__ import annotations

import dataclasses
import json
from typing import Optional, Sequence

from .config import Budgets, DEFAULT_BUDGETS
from .graph import (Graph, GraphError, components, degree_profile,
                    induced_subgraph, is_connected, max_degree_subgraph)


@dataclasses.dataclass(frozen=True)
class EdgeColoring:
    """Total map from edge id to a color in 1..k."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        for c in self.colors:
            if not 1 <= c <= self.k:
                raise GraphError(f"color {c} outside 1..{self.k}")

    @property
    def used(self) -> int:
        return len(set(self.colors))

    def permuted(self, perm: dict[int, int]) -> "EdgeColoring":
        return EdgeColoring(self.k, tuple(perm[c] for c in self.colors))

    def to_json(self, g: Graph) -> dict:
        if len(self.colors) != g.m:
            raise GraphError("coloring does not match the graph's edge count")
        return {"k": self.k, "edges": [[u, v, self.colors[i]] for u, v, i in g.edge_list()]}

    def dumps(self, g: Graph) -> str:
        return json.dumps(self.to_json(g), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict, g: Optional[Graph] = None) -> "EdgeColoring":
        edges = obj["edges"]
        if g is not None:
            if len(edges) != g.m:
                raise GraphError(f"coloring lists {len(edges)} edges, graph has {g.m}")
            for (u, v, _), e in zip(edges, g.edges):
                if tuple(sorted((u, v))) != e:
                    raise GraphError(f"coloring edge ({u}, {v}) does not match graph edge {e}")
        return cls(int(obj["k"]), tuple(c for _, _, c in edges))


def conflicts(g: Graph, colors: Sequence[int]) -> list[tuple[int, int]]:
    """Pairs of adjacent edges sharing a color."""
    bad = []
    for v in g.vertices():
        seen: dict[int, int] = {}
        for e in g.incidence[v]:
            c = colors[e]
            if c in seen:
                bad.append((seen[c], e))
            else:
                seen[c] = e
    return bad


def is_proper(g: Graph, c: EdgeColoring) -> bool:
    return len(c.colors) == g.m and not conflicts(g, c.colors)


def proper_vertices(g: Graph, c: EdgeColoring) -> list[int]:
    """Vertices whose incident edges all get distinct colors."""
    return [v for v in g.vertices()
            if len({c.colors[e] for e in g.incidence[v]}) == g.degree(v)]


def vizing_proper_coloring(g: Graph) -> EdgeColoring:
    """Misra-Gries fan recoloring: a proper coloring with at most Delta+1 colors."""
    if not g.is_simple:
        raise GraphError("vizing_proper_coloring needs a simple graph; use shannon_proper_coloring")
    delta = degree_profile(g).max_degree
    k = delta + 1
    color = [0] * g.m
    # at[v][c] = edge id colored c at v
    at: list[dict[int, int]] = [dict() for _ in range(g.n)]
    idx = g.edge_index

    def eid(a, b):
        return idx[(a, b) if a < b else (b, a)]

    def free(v):
        for c in range(1, k + 1):
            if c not in at[v]:
                return c
        raise AssertionError("no free color")

    def is_free(v, c):
        return c not in at[v]

    def set_color(e, c):
        a, b = g.edges[e]
        old = color[e]
        if old:
            del at[a][old]
            del at[b][old]
        color[e] = c
        if c:
            at[a][c] = e
            at[b][c] = e

    for e0 in range(g.m):
        x, f0 = g.edges[e0]
        common = next((c for c in range(1, k + 1) if is_free(x, c) and is_free(f0, c)), None)
        if common is not None:
            set_color(e0, common)
            continue
        # maximal fan at x starting with f0
        fan = [f0]
        in_fan = {f0}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for y in sorted(g.neighbors[x]):
                if y in in_fan:
                    continue
                c = color[eid(x, y)]
                if c and is_free(last, c):
                    fan.append(y)
                    in_fan.add(y)
                    grown = True
                    break
        c = free(x)
        d = free(fan[-1])
        if c != d:
            # invert the cd-path starting at x
            path = []
            v, want = x, d
            while want in at[v]:
                e = at[v][want]
                path.append(e)
                v = g.other(e, v)
                want = c if want == d else d
            saved = [(e, color[e]) for e in path]
            for e, _ in saved:
                set_color(e, 0)
            for e, col in saved:
                set_color(e, c if col == d else d)
        # find w in fan with d free, prefix fan[:w] still a fan
        w_pos = len(fan) - 1
        for i, y in enumerate(fan):
            if is_free(y, d):
                if i == 0 or _prefix_is_fan(fan[: i + 1], x, color, eid, is_free):
                    w_pos = i
                    break
        # rotate fan prefix
        for i in range(w_pos):
            e_cur = eid(x, fan[i])
            e_next = eid(x, fan[i + 1])
            nc = color[e_next]
            set_color(e_next, 0)
            set_color(e_cur, nc)
        set_color(eid(x, fan[w_pos]), d)
    res = EdgeColoring(max(k, 1), tuple(color) if g.m else ())
    assert is_proper(g, res), "vizing coloring not proper"
    return res


def _prefix_is_fan(fan, x, color, eid, is_free) -> bool:
    for i in range(1, len(fan)):
        c = color[eid(x, fan[i])]
        if not c or not is_free(fan[i - 1], c):
            return False
    return True


class _ProperSearch:
    """Backtracking proper edge coloring with a fixed number of colors."""

    def __init__(self, g: Graph, k: int, node_limit: Optional[int] = None,
                 fixed: Optional[dict[int, int]] = None):
        self.g = g
        self.k = k
        self.node_limit = node_limit
        self.nodes = 0
        degs = degree_profile(g).degrees
        fixed = fixed or {}
        self.order = sorted((e for e in range(g.m) if e not in fixed),
                            key=lambda e: (-max(degs[g.edges[e][0]], degs[g.edges[e][1]]), e))
        self.color = [0] * g.m
        self.used = [0] * g.n          # bitmask of colors at each vertex
        for e, c in fixed.items():
            self.color[e] = c
            a, b = g.edges[e]
            self.used[a] |= 1 << c
            self.used[b] |= 1 << c
        # with nothing precolored, colors are interchangeable
        self.symmetric = not fixed

    def run(self) -> Optional[list[int]]:
        if self._extend(0, 0):
            return list(self.color)
        return None

    def _extend(self, i: int, top: int) -> bool:
        if i == len(self.order):
            return True
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceeded
        e = self.order[i]
        a, b = self.g.edges[e]
        busy = self.used[a] | self.used[b]
        hi = min(self.k, top + 1) if self.symmetric else self.k
        for c in range(1, hi + 1):
            bit = 1 << c
            if busy & bit:
                continue
            self.color[e] = c
            self.used[a] |= bit
            self.used[b] |= bit
            if self._extend(i + 1, max(top, c)):
                return True
            self.used[a] &= ~bit
            self.used[b] &= ~bit
            self.color[e] = 0
        return False


class BudgetExceeded(Exception):
    """A search hit its configured budget."""


def proper_coloring_with(g: Graph, k: int, node_limit: Optional[int] = None,
                         fixed: Optional[dict[int, int]] = None) -> Optional[EdgeColoring]:
    """A proper coloring with colors 1..k, or None if none exists."""
    if g.m == 0:
        return EdgeColoring(max(k, 1), ())
    if k < degree_profile(g).max_degree:
        return None
    res = _ProperSearch(g, k, node_limit, fixed).run()
    return None if res is None else EdgeColoring(k, tuple(res))


def shannon_proper_coloring(g: Graph) -> EdgeColoring:
    """Proper coloring of a loopless multigraph with at most floor(3*Delta/2) colors."""
    delta = degree_profile(g).max_degree
    k = max(3 * delta // 2, 1)
    res = proper_coloring_with(g, k)
    assert res is not None, "Shannon bound violated: search found no coloring"
    return res


@dataclasses.dataclass(frozen=True)
class ChromaticIndex:
    """Exact value when ``lower == upper``; otherwise an unresolved bracket."""

    lower: int
    upper: int
    witness: Optional[EdgeColoring]

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None

    def to_json(self):
        return self.value if self.exact else [self.lower, self.upper]


def _max_multiplicity(g: Graph) -> int:
    counts: dict[tuple[int, int], int] = {}
    for e in g.edges:
        counts[e] = counts.get(e, 0) + 1
    return max(counts.values(), default=0)


def chromatic_index_exact(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> ChromaticIndex:
    """Exact chi' by backtracking, or a bracket if the graph is over budget."""
    delta = degree_profile(g).max_degree
    if g.m == 0:
        return ChromaticIndex(0, 0, EdgeColoring(1, ()))
    hi = delta + 1 if g.is_simple else 3 * delta // 2
    if g.m > budgets.max_chi_edges:
        return ChromaticIndex(delta, hi, None)
    # each color class is a matching of at most floor(n/2) edges
    lo = max(delta, -(-g.m // (g.n // 2)))
    for k in range(lo, max(hi, lo) + 1):
        try:
            res = proper_coloring_with(g, k, budgets.max_nodes)
        except BudgetExceeded:
            return ChromaticIndex(k, hi, None)
        if res is not None:
            return ChromaticIndex(k, k, res)
    raise AssertionError("chromatic index exceeded its theoretical upper bound")


def is_overfull(g: Graph) -> bool:
    g.require_simple("is_overfull")
    return g.m > (g.n // 2) * degree_profile(g).max_degree


def _is_tree_or_unicyclic(n: int, m: int) -> bool:
    return m in (n - 1, n)


def class_one_sufficient(g: Graph) -> bool:
    """The G_Delta condition that guarantees Class 1.

    True when every component of the max-degree subgraph is a tree or
    unicyclic and not all of those components are cycles.
    """
    g.require_simple("class_one_sufficient")
    if g.m == 0:
        return False
    sub, _ = max_degree_subgraph(g)
    comps = components(sub)
    all_cycles = True
    for comp in comps:
        h, _ = induced_subgraph(sub, comp)
        if not _is_tree_or_unicyclic(h.n, h.m):
            return False
        if not (h.m == h.n and all(h.degree(v) == 2 for v in h.vertices())):
            all_cycles = False
    return not all_cycles


def class_one_sufficient_components(g: Graph) -> bool:
    """Per-component version for possibly disconnected graphs.

    Each component whose maximum degree equals Delta(G) must pass
    ``class_one_sufficient``; smaller components are Class 1 at Delta(G)
    by Vizing's bound.
    """
    delta = degree_profile(g).max_degree
    for comp in components(g):
        h, _ = induced_subgraph(g, comp)
        if degree_profile(h).max_degree == delta and not class_one_sufficient(h):
            return False
    return True


def is_connected_simple(g: Graph) -> bool:
    return g.is_simple and is_connected(g)
