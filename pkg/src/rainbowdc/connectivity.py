"""Local and upper edge-connectivity, minimum cuts, and graph shrinking.

Max-flow is a unit-capacity augmenting-path search that scans edges in
ascending id order, so every returned cut is reproducible.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from .graph import Graph, GraphError, degree_profile, is_connected


@dataclasses.dataclass(frozen=True)
class CutCertificate:
    """Vertex side ``side`` with ``pair[0]`` inside and ``pair[1]`` outside."""

    side: frozenset[int]
    crossing_edges: tuple[int, ...]
    pair: tuple[int, int]

    def to_json(self) -> dict:
        return {"pair": list(self.pair), "side": sorted(self.side), "edges": list(self.crossing_edges)}

    @classmethod
    def from_json(cls, obj: dict) -> "CutCertificate":
        return cls(frozenset(obj["side"]), tuple(obj["edges"]), tuple(obj["pair"]))


def crossing_edges(g: Graph, side: Iterable[int]) -> tuple[int, ...]:
    s = set(side)
    return tuple(i for i, (a, b) in enumerate(g.edges) if (a in s) != (b in s))


def separates(g: Graph, removed_edges: Iterable[int], u: int, v: int) -> bool:
    """True if deleting ``removed_edges`` leaves u and v in different components."""
    gone = set(removed_edges)
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for e in g.incidence[x]:
            if e in gone:
                continue
            y = g.other(e, x)
            if y == v:
                return False
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return True


def _max_flow(g: Graph, s: int, t: int, limit: Optional[int] = None) -> tuple[int, set[int]]:
    """Unit-capacity max flow; returns (value, source side of final residual graph)."""
    # flow[e] = +1 means one unit goes edges[e][0] -> edges[e][1]
    flow = [0] * g.m
    value = 0
    while limit is None or value < limit:
        parent: dict[int, tuple[int, int]] = {s: (-1, -1)}
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            for e in g.incidence[x]:
                a, b = g.edges[e]
                y, sign = (b, 1) if a == x else (a, -1)
                if y in parent or flow[e] == sign:
                    continue
                parent[y] = (x, e)
                queue.append(y)
        if t not in parent:
            return value, set(parent)
        y = t
        while y != s:
            x, e = parent[y]
            flow[e] += 1 if g.edges[e][0] == x else -1
            y = x
        value += 1
    # limit reached: still report the residual source side
    reach = {s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for e in g.incidence[x]:
            a, b = g.edges[e]
            y, sign = (b, 1) if a == x else (a, -1)
            if y not in reach and flow[e] != sign:
                reach.add(y)
                queue.append(y)
    return value, reach


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise GraphError("u and v must differ")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError("vertex out of range")


def local_edge_connectivity(g: Graph, u: int, v: int) -> int:
    _check_pair(g, u, v)
    return _max_flow(g, u, v)[0]


def min_edge_cut(g: Graph, u: int, v: int) -> CutCertificate:
    _check_pair(g, u, v)
    value, side = _max_flow(g, u, v)
    cut = crossing_edges(g, side)
    assert len(cut) == value
    return CutCertificate(frozenset(side), cut, (u, v))


class UpperConnectivity(NamedTuple):
    value: int
    pair: tuple[int, int]


def upper_edge_connectivity(g: Graph) -> UpperConnectivity:
    """lambda+(G): the largest local edge-connectivity over all vertex pairs."""
    if g.n < 2:
        raise GraphError("upper edge-connectivity needs at least two vertices")
    if not is_connected(g):
        raise GraphError("upper edge-connectivity needs a connected graph")
    degs = degree_profile(g).degrees
    best = UpperConnectivity(0, (0, 1))
    for u, v in combinations(range(g.n), 2):
        cap = min(degs[u], degs[v])
        if cap <= best.value:
            continue
        val = local_edge_connectivity(g, u, v)
        if val > best.value:
            best = UpperConnectivity(val, (u, v))
    return best


def lambda_plus(g: Graph) -> int:
    return upper_edge_connectivity(g).value


def edge_connectivity(g: Graph) -> int:
    """Global edge-connectivity lambda(G) via flows from vertex 0."""
    if g.n < 2:
        return 0
    if not is_connected(g):
        return 0
    return min(local_edge_connectivity(g, 0, v) for v in range(1, g.n))


class Shrunk(NamedTuple):
    graph: Graph
    vertex_map: tuple[int, ...]      # old vertex -> new vertex
    edge_origin: tuple[int, ...]     # new edge id -> old edge id
    merged: int                      # new index of the identified vertex


def shrink(g: Graph, xs: Iterable[int]) -> Shrunk:
    """G/X: drop edges inside X and identify X to one vertex.

    Vertices outside X keep their relative order; the merged vertex is last.
    Edges from X to the rest are kept with multiplicity.
    """
    x = set(xs)
    if not x or len(x) >= g.n or not x <= set(range(g.n)):
        raise GraphError("shrink needs a nonempty proper subset of the vertices")
    outside = [v for v in g.vertices() if v not in x]
    merged = len(outside)
    vmap = [merged] * g.n
    for i, v in enumerate(outside):
        vmap[v] = i
    edges, origin = [], []
    for i, (a, b) in enumerate(g.edges):
        if a in x and b in x:
            continue
        edges.append((vmap[a], vmap[b]))
        origin.append(i)
    return Shrunk(Graph(merged + 1, tuple(edges)), tuple(vmap), tuple(origin), merged)


@dataclasses.dataclass(frozen=True)
class SplitStep:
    pair: tuple[int, int]         # original vertex ids
    cut: tuple[int, ...]          # original edge ids
    side: str                     # "C1" or "C2": which side's vertices were kept


@dataclasses.dataclass(frozen=True)
class ShrinkPiece:
    """One terminal piece of the shrinking decomposition.

    ``vertex_origin[i]`` is the set of original vertices that vertex i
    stands for (a singleton for an unshrunk vertex). ``edge_origin[j]`` is
    the original id of edge j.
    """

    graph: Graph
    vertex_origin: tuple[frozenset[int], ...]
    edge_origin: tuple[int, ...]
    special_vertex: Optional[int]
    provenance: tuple[SplitStep, ...]

    def to_json(self) -> dict:
        return {
            "vertices": [sorted(s) for s in self.vertex_origin],
            "edges": [[u, v, self.edge_origin[i]] for u, v, i in self.graph.edge_list()],
            "special_vertex": self.special_vertex,
            "provenance": [{"pair": list(s.pair), "cut": list(s.cut), "side": s.side}
                           for s in self.provenance],
        }


@dataclasses.dataclass(frozen=True)
class _Work:
    graph: Graph
    vertex_origin: tuple[frozenset[int], ...]
    edge_origin: tuple[int, ...]
    provenance: tuple[SplitStep, ...]


@dataclasses.dataclass(frozen=True)
class SplitNode:
    """Internal node of the decomposition tree; children are C1-kept then C2-kept."""

    work: _Work
    step_pair: tuple[int, int]
    cut: tuple[int, ...]
    children: tuple["SplitNode | ShrinkPiece", "SplitNode | ShrinkPiece"]


def _high_vertices(g: Graph, k: int) -> list[int]:
    degs = degree_profile(g).degrees
    return [v for v in g.vertices() if degs[v] >= k + 1]


def _decompose(w: _Work, k: int) -> "SplitNode | ShrinkPiece":
    high = _high_vertices(w.graph, k)
    if len(high) < 2:
        return ShrinkPiece(w.graph, w.vertex_origin, w.edge_origin,
                           high[0] if high else None, w.provenance)
    u, v = high[0], high[1]
    cert = min_edge_cut(w.graph, u, v)
    if len(cert.crossing_edges) > k:
        raise AssertionError(f"min cut between high-degree vertices exceeds lambda+ ({k})")
    side_u = set(cert.side)
    side_v = set(w.graph.vertices()) - side_u
    # C1 is the side holding the smaller (local) vertex index
    c1, c2 = (side_u, side_v) if min(side_u) < min(side_v) else (side_v, side_u)
    ou = next(iter(w.vertex_origin[u]))
    ov = next(iter(w.vertex_origin[v]))
    cut_orig = tuple(sorted(w.edge_origin[e] for e in cert.crossing_edges))
    children = []
    for keep, shrunk_side, label in ((c1, c2, "C1"), (c2, c1, "C2")):
        sh = shrink(w.graph, shrunk_side)
        vorig = [frozenset()] * sh.graph.n
        for old, new in enumerate(sh.vertex_map):
            vorig[new] = vorig[new] | w.vertex_origin[old]
        step = SplitStep((ou, ov), cut_orig, label)
        child = _Work(sh.graph, tuple(vorig),
                      tuple(w.edge_origin[e] for e in sh.edge_origin),
                      w.provenance + (step,))
        children.append(_decompose(child, k))
    return SplitNode(w, (ou, ov), cut_orig, (children[0], children[1]))


def decomposition_tree(g: Graph) -> tuple[int, "SplitNode | ShrinkPiece"]:
    """Run the shrinking operation; return (lambda+, tree of splits)."""
    if not is_connected(g):
        raise GraphError("shrinking decomposition needs a connected graph")
    if g.n < 2:
        return 0, ShrinkPiece(g, (frozenset({0}),) * g.n, (), None, ())
    k = lambda_plus(g)
    root = _Work(g, tuple(frozenset({v}) for v in g.vertices()), tuple(range(g.m)), ())
    return k, _decompose(root, k)


def tree_leaves(node: "SplitNode | ShrinkPiece") -> list[ShrinkPiece]:
    if isinstance(node, ShrinkPiece):
        return [node]
    return tree_leaves(node.children[0]) + tree_leaves(node.children[1])


def shrinking_decomposition(g: Graph) -> list[ShrinkPiece]:
    """Terminal pieces of the shrinking operation, in depth-first C1-before-C2 order.

    While a piece has two or more vertices of degree >= lambda+(G)+1 (degree
    taken in the piece, lambda+ fixed from G), split it along a minimum cut
    between the lexicographically smallest two such vertices and shrink each
    side in turn.
    """
    return tree_leaves(decomposition_tree(g)[1])


class SigmaBound(NamedTuple):
    sigma: int
    asserts_lambda_plus_ge_k_plus_1: bool


def sigma_k_bound(g: Graph, k: int) -> SigmaBound:
    """Edge-count test that forces lambda+ >= k+1 when it succeeds."""
    if not g.n >= k + 2 >= 3:
        raise GraphError(f"need n >= k+2 >= 3 (n={g.n}, k={k})")
    degs = degree_profile(g).degrees
    sigma = sum(k - d for d in degs if d <= k)
    # |E| > (k+1)(n-1)/2 - sigma/2, doubled to stay in integers
    return SigmaBound(sigma, 2 * g.m > (k + 1) * (g.n - 1) - sigma)
