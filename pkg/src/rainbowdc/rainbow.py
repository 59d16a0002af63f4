"""Rainbow cuts, rainbow disconnection colorings and the number rd(G)."""

from __future__ import annotations

import dataclasses
import json
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .coloring import (BudgetExceeded, EdgeColoring, chromatic_index_exact,
                       class_one_sufficient_components, proper_coloring_with,
                       shannon_proper_coloring, vizing_proper_coloring)
from .config import Budgets, DEFAULT_BUDGETS
from .connectivity import (CutCertificate, ShrinkPiece, SplitNode, crossing_edges,
                           decomposition_tree, lambda_plus, separates)
from .cover import cover_search
from .graph import (Graph, GraphError, block_graphs, components, degree_profile,
                    is_connected, remove_vertex)


def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(combinations(range(n), 2))}


def _is_rainbow(colors, edge_ids) -> bool:
    seen = set()
    for e in edge_ids:
        c = colors[e]
        if c in seen:
            return False
        seen.add(c)
    return True


def exists_rainbow_cut(g: Graph, c: EdgeColoring, u: int, v: int) -> Optional[CutCertificate]:
    """A rainbow u-v cut delta(S) with u in S, or None.

    Checking vertex bipartitions is complete: if R is any rainbow u-v cut,
    the boundary of u's component in G - R is contained in R.
    """
    if u == v:
        raise GraphError("u and v must differ")
    others = [x for x in g.vertices() if x not in (u, v)]
    for mask in range(1 << len(others)):
        side = {u} | {others[i] for i in range(len(others)) if mask >> i & 1}
        cut = crossing_edges(g, side)
        if _is_rainbow(c.colors, cut):
            return CutCertificate(frozenset(side), cut, (u, v))
    return None


@dataclasses.dataclass(frozen=True)
class RdCertificate:
    coloring: EdgeColoring
    cuts: tuple[CutCertificate, ...]

    def to_json(self, g: Graph) -> dict:
        obj = self.coloring.to_json(g)
        obj["cuts"] = [cut.to_json() for cut in self.cuts]
        return obj

    def dumps(self, g: Graph) -> str:
        return json.dumps(self.to_json(g), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict, g: Optional[Graph] = None) -> "RdCertificate":
        return cls(EdgeColoring.from_json(obj, g),
                   tuple(CutCertificate.from_json(x) for x in obj.get("cuts", [])))


@dataclasses.dataclass(frozen=True)
class RdVerdict:
    certificate: Optional[RdCertificate]
    failing_pair: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.certificate is not None


def verify_rd_coloring(g: Graph, c: EdgeColoring) -> RdVerdict:
    """Certificate that ``c`` is a rainbow disconnection coloring, else the first failing pair."""
    if len(c.colors) != g.m:
        raise GraphError("coloring does not match the graph's edge count")
    if not is_connected(g):
        raise GraphError("rainbow disconnection needs a connected graph")
    pidx = pair_index(g.n)
    found: dict[tuple[int, int], CutCertificate] = {}
    full = (1 << g.n) - 1
    # every cut is visited once, as the side containing vertex 0
    for mask in range(1 << (g.n - 1)):
        side = (mask << 1) | 1
        if side == full:
            continue
        s = {x for x in g.vertices() if side >> x & 1}
        cut = crossing_edges(g, s)
        if not _is_rainbow(c.colors, cut):
            continue
        rest = [x for x in g.vertices() if x not in s]
        for a in s:
            for b in rest:
                p = (a, b) if a < b else (b, a)
                if p not in found:
                    own = s if a < b else frozenset(rest)
                    found[p] = CutCertificate(frozenset(own), cut, p)
        if len(found) == len(pidx):
            break
    for p in pidx:
        if p not in found:
            return RdVerdict(None, p)
    return RdVerdict(RdCertificate(c, tuple(found[p] for p in pidx)))


def check_certificate(g: Graph, cert: RdCertificate) -> Optional[str]:
    """Re-verify a certificate from scratch; returns None if sound, else a reason."""
    colors = cert.coloring.colors
    if len(colors) != g.m:
        return "coloring does not match the graph's edge count"
    need = set(combinations(range(g.n), 2))
    for cut in cert.cuts:
        u, v = cut.pair
        if u not in cut.side or v in cut.side:
            return f"cut for pair {cut.pair} does not split the pair"
        if tuple(sorted(cut.crossing_edges)) != crossing_edges(g, cut.side):
            return f"cut for pair {cut.pair} lists the wrong crossing edges"
        if not _is_rainbow(colors, cut.crossing_edges):
            return f"cut for pair {cut.pair} is not rainbow"
        if not separates(g, cut.crossing_edges, u, v):
            return f"cut for pair {cut.pair} does not separate it"
        need.discard((min(u, v), max(u, v)))
    if need:
        return f"no cut given for pair {min(need)}"
    return None


@lru_cache(maxsize=4096)
def bonds(g: Graph) -> tuple[tuple[int, int], ...]:
    """All (side mask, crossing-edge mask) with both sides connected; side holds vertex 0."""
    n = g.n
    adj = [0] * n
    for a, b in g.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a

    def connected(mask):
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = adj[low.bit_length() - 1] & mask & ~seen
            seen |= nb
            frontier |= nb
        return seen == mask

    full = (1 << n) - 1
    out = []
    for m in range(1 << (n - 1)):
        side = (m << 1) | 1
        if side == full or not connected(side) or not connected(full & ~side):
            continue
        emask = 0
        for i, (a, b) in enumerate(g.edges):
            if (side >> a & 1) != (side >> b & 1):
                emask |= 1 << i
        out.append((side, emask))
    return tuple(out)


def _pairs_mask(n: int, side: int, pidx) -> int:
    pm = 0
    for (a, b), i in pidx.items():
        if (side >> a & 1) != (side >> b & 1):
            pm |= 1 << i
    return pm


def rd_coloring_with(g: Graph, k: int, node_limit: Optional[int] = None) -> Optional[EdgeColoring]:
    """A rainbow disconnection coloring using colors 1..k, or None if none exists."""
    if g.n < 2:
        return EdgeColoring(max(k, 1), ())
    pidx = pair_index(g.n)
    cands = [(emask, _pairs_mask(g.n, side, pidx)) for side, emask in bonds(g)]
    res = cover_search(g.m, cands, len(pidx), k, node_limit)
    return None if res is None else EdgeColoring(k, tuple(res))


@dataclasses.dataclass(frozen=True)
class RdResult:
    """rd(G) when ``lower == upper``; otherwise the verified bracket."""

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


def _block_rd(b: Graph, budgets: Budgets) -> RdResult:
    lo = lambda_plus(b)
    if b.m == 1:
        return RdResult(1, 1, EdgeColoring(1, (1,)))
    best = _best_upper_coloring(b)
    hi = best.used
    if b.m > budgets.max_rd_edges:
        return RdResult(lo, hi, best)
    for k in range(lo, hi):
        try:
            res = rd_coloring_with(b, k, budgets.max_nodes)
        except BudgetExceeded:
            return RdResult(k, hi, best)
        if res is not None:
            return RdResult(k, k, res)
    return RdResult(hi, hi, best)


def _best_upper_coloring(g: Graph) -> EdgeColoring:
    """Fewest-color verified coloring among the cheap constructions."""
    tries = [rd_upper_three_halves(g)]
    if g.is_simple:
        tries.append(rd_upper_min_bound(g))
    best = min(tries, key=lambda c: (c.used, c.colors))
    return _compress(best)


def _compress(c: EdgeColoring) -> EdgeColoring:
    """Renumber the used colors to 1..used, in order of first appearance."""
    ren: dict[int, int] = {}
    for x in c.colors:
        ren.setdefault(x, len(ren) + 1)
    return EdgeColoring(max(len(ren), 1), tuple(ren[x] for x in c.colors))


def rd_exact(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> RdResult:
    """Exact rd(G) as the maximum over blocks, with a merged witness coloring."""
    if g.n < 2:
        raise GraphError("rd needs a nontrivial graph")
    if not is_connected(g):
        raise GraphError("rd needs a connected graph")
    colors = [0] * g.m
    lo = hi = 0
    witness_ok = True
    for b, _, eorig in block_graphs(g):
        r = _block_rd(b, budgets)
        lo = max(lo, r.lower)
        hi = max(hi, r.upper)
        if r.witness is None:
            witness_ok = False
            continue
        for i, e in enumerate(eorig):
            colors[e] = r.witness.colors[i]
    witness = EdgeColoring(max(hi, 1), tuple(colors)) if witness_ok else None
    if witness is not None:
        assert verify_rd_coloring(g, witness), "merged block witness failed verification"
    return RdResult(lo, hi, witness)


def rd_upper_vertex_removal(g: Graph, u: int) -> EdgeColoring:
    """Color G - u properly, then give each edge uw a color missing at w.

    Uses Delta(H)+1 colors, or Delta(H) when H = G - u passes the Class 1
    test and every neighbor of u has H-degree below Delta(H). Every vertex
    except u ends up proper.
    """
    g.require_simple("rd_upper_vertex_removal")
    if not is_connected(g):
        raise GraphError("rd_upper_vertex_removal needs a connected graph")
    h, hmap = remove_vertex(g, u)
    hdeg = degree_profile(h)
    delta_h = hdeg.max_degree
    pos = {old: new for new, old in enumerate(hmap)}
    nbrs = sorted(g.neighbors[u])
    refined = (h.m > 0 and class_one_sufficient_components(h)
               and all(hdeg.degrees[pos[w]] <= delta_h - 1 for w in nbrs))
    if refined:
        hc = proper_coloring_with(h, delta_h)
        assert hc is not None, "Class 1 sufficient condition held but no Delta-coloring found"
        k = delta_h
    else:
        hc = vizing_proper_coloring(h)
        k = delta_h + 1
    # h edges are g's edges not at u, in the same relative order
    colors = [0] * g.m
    h_iter = iter(hc.colors)
    for i, (a, b) in enumerate(g.edges):
        if u not in (a, b):
            colors[i] = next(h_iter)
    for i, (a, b) in enumerate(g.edges):
        if u in (a, b):
            w = b if a == u else a
            taken = {colors[e] for e in g.incidence[w] if colors[e]}
            colors[i] = min(x for x in range(1, k + 1) if x not in taken)
    res = EdgeColoring(max(k, 1), tuple(colors))
    assert verify_rd_coloring(g, res), "vertex-removal coloring failed verification"
    return res


def rd_upper_min_bound(g: Graph) -> EdgeColoring:
    """Vertex removal at the smallest vertex of maximum degree."""
    g.require_simple("rd_upper_min_bound")
    prof = degree_profile(g)
    v = prof.degrees.index(prof.max_degree)
    res = rd_upper_vertex_removal(g, v)
    bound = min_bound_value(g)
    assert res.used <= bound, f"min-bound coloring used {res.used} > {bound} colors"
    return res


def min_bound_value(g: Graph) -> int:
    prof = degree_profile(g)
    return min(g.n + lambda_plus(g) - prof.max_degree - 1, prof.max_degree + 1)


class GlueError(AssertionError):
    pass


def _color_piece(piece: ShrinkPiece, budget: int) -> list[int]:
    """Rainbow disconnection coloring of a terminal piece, proper away from its special vertex."""
    h = piece.graph
    sv = piece.special_vertex
    if sv is None:
        return list(shannon_proper_coloring(h).colors) if h.m else []
    hp, hmap = remove_vertex(h, sv)
    inner = shannon_proper_coloring(hp).colors if hp.m else ()
    colors = [0] * h.m
    it = iter(inner)
    for i, (a, b) in enumerate(h.edges):
        if sv not in (a, b):
            colors[i] = next(it)
    for i, (a, b) in enumerate(h.edges):
        if sv in (a, b):
            w = b if a == sv else a
            taken = {colors[e] for e in h.incidence[w] if colors[e]}
            free = [x for x in range(1, budget + 1) if x not in taken]
            if not free:
                raise GlueError(f"no free color at vertex {w} of a piece")
            colors[i] = free[0]
    return colors


def _glue(node, k: int, budget: int, trace: list) -> dict[int, int]:
    """Color the subtree rooted at ``node``; returns original edge id -> color."""
    if isinstance(node, ShrinkPiece):
        local = _color_piece(node, budget)
        return {node.edge_origin[i]: c for i, c in enumerate(local)}
    left = _glue(node.children[0], k, budget, trace)
    right = _glue(node.children[1], k, budget, trace)
    # both sides see the cut as the star of a shrunken vertex, which is proper
    perm: dict[int, int] = {}
    for e in node.cut:
        a, b = right[e], left[e]
        if perm.get(a, b) != b:
            raise GlueError(f"cut {node.cut} colored inconsistently on the C2 side")
        perm[a] = b
    if len(set(perm.values())) != len(perm):
        raise GlueError(f"cut {node.cut} not rainbow on the C1 side")
    spare = [x for x in range(1, budget + 1) if x not in perm.values()]
    for x in range(1, budget + 1):
        if x not in perm:
            perm[x] = spare.pop(0)
    trace.append((node.step_pair, node.cut, dict(perm)))
    merged = dict(left)
    for e, c in right.items():
        merged.setdefault(e, perm[c])
    return merged


def rd_upper_three_halves(g: Graph) -> EdgeColoring:
    """Coloring with at most floor(3*lambda+/2) colors via the shrinking decomposition.

    Each terminal piece is colored properly away from its special vertex;
    pieces are then reassembled bottom-up, permuting the colors of one side
    so the shared cut edges agree.
    """
    if not is_connected(g):
        raise GraphError("rd_upper_three_halves needs a connected graph")
    if g.m == 0:
        return EdgeColoring(1, ())
    k, tree = decomposition_tree(g)
    budget = max(3 * k // 2, 1)
    trace: list = []
    colors = _glue(tree, k, budget, trace)
    res = EdgeColoring(budget, tuple(colors[e] for e in range(g.m)))
    verdict = verify_rd_coloring(g, res)
    if not verdict:
        raise GlueError(f"three-halves coloring fails at pair {verdict.failing_pair}; "
                        f"glue steps: {trace}")
    return res


def tree_pieces(node) -> list[ShrinkPiece]:
    if isinstance(node, ShrinkPiece):
        return [node]
    return tree_pieces(node.children[0]) + tree_pieces(node.children[1])


@dataclasses.dataclass(frozen=True)
class UpperBound:
    label: str
    value: int
    witness: Optional[EdgeColoring]


@dataclasses.dataclass(frozen=True)
class BoundReport:
    lambda_plus: int
    chromatic_index: object          # ChromaticIndex
    upper_bounds: tuple[UpperBound, ...]
    rd: Optional[RdResult]

    def to_json(self, g: Graph) -> dict:
        return {
            "n": g.n,
            "m": g.m,
            "max_degree": degree_profile(g).max_degree,
            "lambda_plus": self.lambda_plus,
            "chromatic_index": self.chromatic_index.to_json(),
            "upper_bounds": [
                {"label": b.label, "value": b.value,
                 "witness": None if b.witness is None else b.witness.to_json(g)}
                for b in self.upper_bounds
            ],
            "rd": None if self.rd is None else self.rd.to_json(),
            "rd_witness": (None if self.rd is None or self.rd.witness is None
                           else self.rd.witness.to_json(g)),
        }


def bound_report(g: Graph, budgets: Budgets = DEFAULT_BUDGETS, exact: bool = True) -> BoundReport:
    if not is_connected(g) or g.n < 2:
        raise GraphError("bound_report needs a connected nontrivial graph")
    lp = lambda_plus(g)
    delta = degree_profile(g).max_degree
    chi = chromatic_index_exact(g, budgets)
    ups = []
    if g.is_simple:
        ups.append(UpperBound("delta_plus_one", delta + 1, vizing_proper_coloring(g)))
    chi_up = chi.upper
    ups.append(UpperBound("chromatic_index", chi_up, chi.witness))
    ups.append(UpperBound("three_halves_lambda_plus", max(3 * lp // 2, 1), rd_upper_three_halves(g)))
    if g.is_simple:
        ups.append(UpperBound("min_bound", min_bound_value(g), rd_upper_min_bound(g)))
    for b in ups:
        if b.witness is not None:
            assert verify_rd_coloring(g, b.witness)
            assert b.witness.used <= b.value
    rd = rd_exact(g, budgets) if exact else None
    return BoundReport(lp, chi, tuple(ups), rd)


def component_count(g: Graph) -> int:
    return len(components(g))
