"""Characterization predicates and checked statements about rd(G).

Each predicate is purely structural; the test-suite and the scanners
compare them against exact rd computations.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Iterable, Optional

from .coloring import (BudgetExceeded, chromatic_index_exact, is_overfull,
                       vizing_proper_coloring)
from .config import Budgets, DEFAULT_BUDGETS
from .connectivity import edge_connectivity, lambda_plus
from .graph import (Graph, GraphError, block_graphs, complement, components,
                    degree_profile, is_connected, is_tree, line_graph)
from .io import from_graph6, to_graph6
from .rainbow import (_compress, min_bound_value, rd_coloring_with,
                      rd_exact, rd_upper_min_bound, rd_upper_three_halves,
                      verify_rd_coloring)
from .rvd import rvd_exact


def characterize_rd_1(g: Graph) -> bool:
    return is_tree(g)


def characterize_rd_2(g: Graph) -> bool:
    """Every block is K2 or a cycle, and some block is a cycle."""
    has_cycle = False
    for b, _, _ in block_graphs(g):
        if b.m == 1:
            continue
        if b.n >= 3 and b.m == b.n and b.is_simple:
            has_cycle = True
            continue
        return False
    return has_cycle


def characterize_rd_n_minus_1(g: Graph) -> bool:
    n = g.n
    return sum(1 for d in degree_profile(g).degrees if d == n - 1) >= 2


def _top_pairs(g: Graph) -> list[tuple[int, int]]:
    n = g.n
    degs = degree_profile(g).degrees
    top = [v for v in g.vertices() if degs[v] == n - 2]
    return list(combinations(top, 2))


def _witness_classes(g: Graph, u: int, v: int):
    """x-type, y-type and z-type vertices for a pair u, v."""
    nu, nv = g.neighbors[u], g.neighbors[v]
    xs = {w for w in nu if w != v and w not in nv}
    ys = {w for w in nv if w != u and w not in nu}
    zs = {w for w in g.vertices() if w not in (u, v) and w not in nu and w not in nv}
    return xs, ys, zs


def rd_n_minus_2_conditions(g: Graph) -> set[str]:
    """Which of the three alternative conditions for rd(G) = n-2 hold ("i", "ii", "iii")."""
    n = g.n
    g.require_simple("rd = n-2 conditions")
    if n < 4:
        raise GraphError("the rd = n-2 conditions need n >= 4")
    prof = degree_profile(g)
    degs = prof.degrees
    held = set()
    full = [v for v in g.vertices() if degs[v] == n - 1]
    if len(full) == 1 and any(degs[v] == n - 2 for v in g.vertices()):
        held.add("i")
    if prof.max_degree != n - 2:
        return held
    pairs = _top_pairs(g)
    if any(not g.has_edge(u, v) for u, v in pairs):
        held.add("ii")
        return held
    for u, v in pairs:
        xs, ys, zs = _witness_classes(g, u, v)
        if zs:
            held.add("iii")
            break
        if xs and ys:
            comp_of = {}
            for i, comp in enumerate(components(g, removed_vertices=(u, v))):
                for w in comp:
                    comp_of[w] = i
            # literal reading: some x and y share a component of G - {u, v}
            if any(comp_of[x] == comp_of[y] for x in xs for y in ys):
                held.add("iii")
                break
    return held


def characterize_rd_n_minus_2(g: Graph) -> tuple[bool, Optional[str]]:
    """(holds, first condition met) for the rd(G) = n-2 characterization."""
    held = rd_n_minus_2_conditions(g)
    return bool(held), min(held) if held else None


def ng_extremal_condition(g: Graph) -> bool:
    """The three joint conditions on one side of an extremal Nordhaus-Gaddum pair.

    Degree-2 vertices are counted outside every x-, y- and z-type vertex
    of the unique pair u, v of degree n-2.
    """
    n = g.n
    if n < 4 or not rd_n_minus_2_conditions(g) & {"ii", "iii"}:
        return False
    degs = degree_profile(g).degrees
    top = [v for v in g.vertices() if degs[v] == n - 2]
    if len(top) != 2:
        return False
    u, v = top
    xs, ys, zs = _witness_classes(g, u, v)
    excluded = xs | ys | zs
    return sum(1 for w in g.vertices() if degs[w] == 2 and w not in excluded) >= 2


@dataclasses.dataclass
class NGRecord:
    graph6: str
    n: int
    rd: Optional[int]
    rd_complement: Optional[int]
    lower_ok: bool
    upper_ok: bool
    product_ok: bool
    extremal: bool
    predicted_extremal: bool

    @property
    def consistent(self) -> bool:
        return self.lower_ok and self.upper_ok and self.product_ok and self.extremal == self.predicted_extremal

    def to_json(self) -> dict:
        d = dataclasses.asdict(self)
        d["consistent"] = self.consistent
        return d


def nordhaus_gaddum_check(g: Graph, budgets: Budgets = DEFAULT_BUDGETS,
                          rd_g: Optional[int] = None, rd_h: Optional[int] = None) -> NGRecord:
    """Check both sum/product bounds and the extremal characterization on (G, complement)."""
    h = complement(g)
    if not is_connected(g) or not is_connected(h):
        raise GraphError("Nordhaus-Gaddum check needs G and its complement connected")
    n = g.n
    if rd_g is None:
        rd_g = rd_exact(g, budgets).value
    if rd_h is None:
        rd_h = rd_exact(h, budgets).value
    if rd_g is None or rd_h is None:
        raise GraphError("rd over budget for Nordhaus-Gaddum check")
    s, p = rd_g + rd_h, rd_g * rd_h
    return NGRecord(
        graph6=to_graph6(g), n=n, rd=rd_g, rd_complement=rd_h,
        lower_ok=n - 2 <= s, upper_ok=s <= 2 * n - 5,
        product_ok=n - 3 <= p <= (n - 2) * (n - 3),
        extremal=s == 2 * n - 5,
        predicted_extremal=ng_extremal_condition(g) or ng_extremal_condition(h),
    )


@dataclasses.dataclass
class OddRegularRecord:
    graph6: str
    k: int
    chromatic_index: int
    rd: int
    equivalence_holds: bool
    bracket_holds: bool


def odd_regular_equivalence(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> OddRegularRecord:
    prof = degree_profile(g)
    k = prof.max_degree
    if prof.min_degree != k or k % 2 == 0:
        raise GraphError("needs an odd-regular graph")
    if not is_connected(g) or edge_connectivity(g) != k:
        raise GraphError(f"needs a {k}-edge-connected graph")
    chi = chromatic_index_exact(g, budgets)
    rd = rd_exact(g, budgets)
    if not (chi.exact and rd.exact):
        raise GraphError("exact searches over budget")
    return OddRegularRecord(to_graph6(g), k, chi.value, rd.value,
                            (chi.value == k) == (rd.value == k), k <= rd.value <= k + 1)


@dataclasses.dataclass
class LineCheck:
    rd: Optional[int]
    rvd_line: Optional[int]
    inequality_holds: Optional[bool]
    min_degree: int
    chromatic_index: Optional[int]
    delta4_premise: bool
    delta4_conclusion: Optional[bool]

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


def rd_vs_rvd_line_check(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> LineCheck:
    g.require_simple("rd_vs_rvd_line_check")
    rd = rd_exact(g, budgets).value
    lg = line_graph(g).graph
    rvd = rvd_exact(lg, budgets).value if is_connected(lg) else None
    holds = None if rd is None or rvd is None else rd <= rvd
    delta_min = degree_profile(g).min_degree
    chi = chromatic_index_exact(g, budgets).value
    premise = delta_min >= 4 and rd is not None and rd == rvd
    conclusion = (rd == chi) if premise and chi is not None else None
    return LineCheck(rd, rvd, holds, delta_min, chi, premise, conclusion)


def multipartite_formula(parts: Iterable[int]) -> int:
    p = sorted(parts)
    n = sum(p)
    return n - p[1] if p[0] == 1 else n - p[0]


# conjecture scanner


@dataclasses.dataclass(frozen=True)
class ScanOptions:
    mode: str = "exact"               # "exact" or "witness"
    budgets: Budgets = DEFAULT_BUDGETS
    check_chi: bool = True


def _claims(g: Graph, lp: int, rd: Optional[int], rd_upper: Optional[int], opts: ScanOptions):
    """Yield (claim, premise holds, conclusion holds, observed)."""
    n = g.n
    delta = degree_profile(g).max_degree
    conj_ok = rd_upper is not None and rd_upper <= lp + 1
    observed = {"lambda_plus": lp, "rd": rd, "rd_upper": rd_upper, "max_degree": delta}
    yield "conjecture_upper", True, conj_ok, observed
    if rd is not None:
        yield "conjecture_lower", True, lp <= rd, observed
        yield "three_halves_bound", True, rd <= max(3 * lp // 2, 1), observed
        yield "min_bound", True, rd <= min_bound_value(g), observed
    yield "thm_max_degree_le_3", delta <= 3, conj_ok, observed
    yield "thm_max_degree_ge_n_minus_3", delta >= n - 3, conj_ok, observed
    yield "cor_order_le_7", n <= 7, conj_ok, observed
    yield "lem_lambda_plus_eq_delta", lp == delta, conj_ok, observed
    over = is_overfull(g)
    yield "thm_overfull_lambda_plus_eq_delta", over, lp == delta, observed
    yield "thm_overfull_bound", over, conj_ok, observed


def scan_one(code: str, opts: ScanOptions = ScanOptions()) -> dict:
    g = from_graph6(code)
    rec: dict = {"graph6": code, "n": g.n, "m": g.m}
    if not is_connected(g) or g.n < 2:
        rec["status"] = "skipped"
        rec["violations"] = []
        return rec
    lp = lambda_plus(g)
    delta = degree_profile(g).max_degree
    rec.update(lambda_plus=lp, max_degree=delta)
    trace = []
    rd_val = rd_upper = None
    status = "resolved"
    if opts.mode == "exact":
        res = rd_exact(g, opts.budgets)
        rec["rd"] = res.to_json()
        if res.exact:
            rd_val = rd_upper = res.value
        else:
            rd_upper = res.upper
            status = "unresolved"
        trace.append({"method": "rd_exact", "result": res.to_json()})
        if opts.check_chi:
            chi = chromatic_index_exact(g, opts.budgets)
            rec["chromatic_index"] = chi.to_json()
            lam = edge_connectivity(g)
            rec["lambda"] = lam
            if rd_val is not None and chi.exact:
                rec["chain_ok"] = lam <= lp <= rd_val <= chi.value <= delta + 1
    else:
        target = lp + 1
        for name, fn in (("three_halves", rd_upper_three_halves), ("min_bound", rd_upper_min_bound),
                         ("proper", vizing_proper_coloring)):
            c = _compress(fn(g))
            trace.append({"method": name, "colors": c.used})
            rd_upper = c.used if rd_upper is None else min(rd_upper, c.used)
            if c.used <= target:
                break
        if rd_upper > target:
            try:
                w = rd_coloring_with(g, target, opts.budgets.max_nodes)
            except BudgetExceeded:
                w = None
                status = "unresolved"
            trace.append({"method": "search", "k": target, "found": w is not None})
            if w is not None:
                assert verify_rd_coloring(g, w)
                rd_upper = target
            elif status != "unresolved":
                # no coloring with lambda+ + 1 colors exists
                rd_upper = None
        rec["rd_upper"] = rd_upper
    rec["status"] = status
    violations = []
    for claim, premise, ok, observed in _claims(g, lp, rd_val, rd_upper, opts):
        if not premise or ok:
            continue
        if status == "unresolved" and claim != "thm_overfull_lambda_plus_eq_delta":
            continue
        violations.append({"claim": claim, "observed": observed})
    if rec.get("chain_ok") is False:
        violations.append({"claim": "bound_chain", "observed": {"chi": rec.get("chromatic_index")}})
    rec["violations"] = violations
    if violations:
        rec["trace"] = trace
    return rec


def _scan_one_star(args):
    return scan_one(*args)


@dataclasses.dataclass
class ScanReport:
    corpus: str
    records: list
    violations: list

    @property
    def unresolved(self) -> int:
        return sum(1 for r in self.records if r.get("status") == "unresolved")

    def summary(self) -> dict:
        return {"corpus": self.corpus, "graphs": len(self.records),
                "resolved": sum(1 for r in self.records if r.get("status") == "resolved"),
                "unresolved": self.unresolved, "violations": len(self.violations)}


def conjecture_scan(codes: Iterable[str], opts: ScanOptions = ScanOptions(), workers: int = 1,
                    corpus: str = "stream") -> ScanReport:
    codes = [c.strip() for c in codes if c.strip()]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_scan_one_star, [(c, opts) for c in codes], chunksize=8))
    else:
        records = [scan_one(c, opts) for c in codes]
    violations = [{"graph6": r["graph6"], **v} for r in records for v in r["violations"]]
    return ScanReport(corpus, records, violations)


def ng_scan(graphs: Iterable[Graph], budgets: Budgets = DEFAULT_BUDGETS) -> list[NGRecord]:
    """Nordhaus-Gaddum records for every graph whose complement is also connected."""
    cache: dict[str, int] = {}

    def rd_of(h: Graph) -> int:
        key = to_graph6(h)
        if key not in cache:
            val = rd_exact(h, budgets).value
            if val is None:
                raise GraphError(f"rd over budget for {key}")
            cache[key] = val
        return cache[key]

    out = []
    for g in graphs:
        if g.n < 4 or not is_connected(g):
            continue
        h = complement(g)
        if not is_connected(h):
            continue
        out.append(nordhaus_gaddum_check(g, budgets, rd_of(g), rd_of(h)))
    return out

