"""Loopless multigraphs on dense integer vertices, plus structural queries."""

from __future__ import annotations

import dataclasses
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or inputs outside an operation's domain."""


class Edge(NamedTuple):
    u: int
    v: int
    id: int


class EdgeStar(NamedTuple):
    center: int
    edges: tuple[int, ...]


class DegreeProfile(NamedTuple):
    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int


@dataclasses.dataclass(frozen=True)
class Graph:
    """Undirected loopless multigraph.

    Vertices are ``0..n-1`` and edge ids are the positions in ``edges``.
    Each edge is stored with its smaller endpoint first. Parallel edges are
    allowed and are told apart by id.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        normalized = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            normalized.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple((e[0], e[1]) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def edge_list(self) -> Iterator[Edge]:
        for i, (u, v) in enumerate(self.edges):
            yield Edge(u, v, i)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident with each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def star(self, v: int) -> EdgeStar:
        return EdgeStar(v, self.incidence[v])

    def other(self, edge_id: int, v: int) -> int:
        a, b = self.edges[edge_id]
        return b if a == v else a

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def require_simple(self, what: str = "operation") -> None:
        if not self.is_simple:
            raise GraphError(f"{what} requires a simple graph (parallel edges present)")

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map (u, v) with u < v to the smallest edge id joining them."""
        idx: dict[tuple[int, int], int] = {}
        for i, e in enumerate(self.edges):
            idx.setdefault(e, i)
        return idx

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def degree_profile(g: Graph) -> DegreeProfile:
    degs = tuple(len(x) for x in g.incidence)
    if not degs:
        return DegreeProfile(degs, 0, 0)
    return DegreeProfile(degs, max(degs), min(degs))


def max_degree(g: Graph) -> int:
    return degree_profile(g).max_degree


def components(g: Graph, removed_vertices: Iterable[int] = (),
               removed_edges: Iterable[int] = ()) -> list[list[int]]:
    gone_v = set(removed_vertices)
    gone_e = set(removed_edges)
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s] or s in gone_v:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            x = stack.pop()
            for e in g.incidence[x]:
                if e in gone_e:
                    continue
                y = g.other(e, x)
                if not seen[y] and y not in gone_v:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph, relabeled in ascending order; returns (graph, new->old)."""
    keep = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(keep), tuple(edges)), keep


def edge_subgraph(g: Graph, edge_ids: Iterable[int]) -> tuple[Graph, list[int], list[int]]:
    """Subgraph spanned by the given edges; returns (graph, new->old vertex, new->old edge)."""
    eids = sorted(set(edge_ids))
    verts = sorted({x for e in eids for x in g.edges[e]})
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[g.edges[e][0]], pos[g.edges[e][1]]) for e in eids]
    return Graph(len(verts), tuple(edges)), verts, eids


def remove_vertex(g: Graph, u: int) -> tuple[Graph, list[int]]:
    return induced_subgraph(g, [v for v in g.vertices() if v != u])


def max_degree_subgraph(g: Graph) -> tuple[Graph, list[int]]:
    """Subgraph induced by the vertices of maximum degree (G_Delta)."""
    g.require_simple("max_degree_subgraph")
    prof = degree_profile(g)
    return induced_subgraph(g, [v for v in g.vertices() if prof.degrees[v] == prof.max_degree])


def complement(g: Graph) -> Graph:
    g.require_simple("complement")
    present = set(g.edges)
    return Graph(g.n, tuple(e for e in combinations(range(g.n), 2) if e not in present))


class LineGraph(NamedTuple):
    graph: Graph
    vertex_to_edge: tuple[int, ...]


def line_graph(g: Graph) -> LineGraph:
    """L(G): vertex i of the result is edge i of ``g``."""
    g.require_simple("line_graph")
    edges = []
    for a, b in combinations(range(g.m), 2):
        if set(g.edges[a]) & set(g.edges[b]):
            edges.append((a, b))
    return LineGraph(Graph(g.m, tuple(edges)), tuple(range(g.m)))


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def blocks(g: Graph) -> list[list[int]]:
    """Blocks of a connected graph as sorted lists of edge ids.

    Bridges come out as single-edge blocks. Parallel edges between the same
    two vertices land in the same block. Iterative Hopcroft-Tarjan.
    """
    if not is_connected(g):
        raise GraphError("blocks() requires a connected graph")
    if g.m == 0:
        return []
    disc = [-1] * g.n
    low = [0] * g.n
    out: list[list[int]] = []
    edge_stack: list[int] = []
    timer = 0
    disc[0] = low[0] = timer
    # frames: (vertex, parent edge id, iterator position)
    stack = [(0, -1, 0)]
    while stack:
        v, pe, i = stack[-1]
        inc = g.incidence[v]
        if i < len(inc):
            stack[-1] = (v, pe, i + 1)
            e = inc[i]
            if e == pe:
                continue
            w = g.other(e, v)
            if disc[w] == -1:
                timer += 1
                disc[w] = low[w] = timer
                edge_stack.append(e)
                stack.append((w, e, 0))
            elif disc[w] < disc[v]:
                edge_stack.append(e)
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == pe:
                        break
                out.append(sorted(block))
    return out


def block_graphs(g: Graph) -> list[tuple[Graph, list[int], list[int]]]:
    """Each block as its own graph with (new->old vertex, new->old edge) maps."""
    return [edge_subgraph(g, b) for b in blocks(g)]


def cut_vertices(g: Graph) -> set[int]:
    seen: dict[int, int] = {}
    cuts = set()
    for b in blocks(g):
        for v in {x for e in b for x in g.edges[e]}:
            seen[v] = seen.get(v, 0) + 1
            if seen[v] > 1:
                cuts.add(v)
    return cuts


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Rename vertex v to perm[v]; edge ids are kept."""
    return Graph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))
