"""Command-line interface: ``rainbowdc <command> [input] [options]``.

Exit codes: 0 success, 1 violation or failed verification, 2 usage error,
3 budget exhausted (unresolved result).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Optional

from . import corpus
from .coloring import EdgeColoring, chromatic_index_exact
from .config import Budgets
from .connectivity import upper_edge_connectivity
from .families import parse_family_spec
from .graph import Graph, GraphError, line_graph
from .io import from_graph6, read_lines, to_dot, to_graph6
from .rainbow import (RdCertificate, bound_report, check_certificate, rd_exact,
                      rd_upper_min_bound, rd_upper_three_halves,
                      rd_upper_vertex_removal, verify_rd_coloring)
from .theorems import (ScanOptions, conjecture_scan, nordhaus_gaddum_check,
                       rd_vs_rvd_line_check)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class UsageError(Exception):
    pass


def _input_codes(args) -> list[str]:
    if getattr(args, "family", None):
        return [to_graph6(parse_family_spec(args.family))]
    if getattr(args, "g6", None):
        return [args.g6.strip()]
    if getattr(args, "corpus", None):
        return corpus.corpus_lines(args.corpus)
    src = getattr(args, "input", "-")
    if src == "-":
        return read_lines(sys.stdin)
    with open(src) as fh:
        return read_lines(fh)


def _graphs(args) -> Iterator[tuple[str, Graph]]:
    for code in _input_codes(args):
        yield code, from_graph6(code)


def _single(args) -> tuple[str, Graph]:
    items = list(_graphs(args))
    if len(items) != 1:
        raise UsageError(f"expected exactly one input graph, got {len(items)}")
    return items[0]


def _budgets(args) -> Budgets:
    return Budgets(max_rd_edges=args.max_edges, max_chi_edges=args.max_chi_edges,
                   max_rvd_vertices=args.max_rvd_vertices, max_nodes=args.max_nodes)


def _emit(out, line: str) -> None:
    out.write(line + "\n")


def cmd_bounds(args, out) -> int:
    code = EXIT_OK
    for g6, g in _graphs(args):
        rep = bound_report(g, _budgets(args))
        obj = rep.to_json(g)
        obj["graph6"] = g6
        _emit(out, dumps(obj))
        if rep.rd is not None and not rep.rd.exact:
            code = EXIT_BUDGET
    return code


def _scalar_cmd(args, out, name, fn) -> int:
    code = EXIT_OK
    for g6, g in _graphs(args):
        val = fn(g)
        if isinstance(val, list):
            code = EXIT_BUDGET
        if args.format == "json":
            _emit(out, dumps({"graph6": g6, name: val}))
        else:
            _emit(out, str(val) if not isinstance(val, list) else f"[{val[0]}, {val[1]}]")
    return code


def cmd_rd(args, out) -> int:
    return _scalar_cmd(args, out, "rd", lambda g: rd_exact(g, _budgets(args)).to_json())


def cmd_chi(args, out) -> int:
    return _scalar_cmd(args, out, "chromatic_index",
                       lambda g: chromatic_index_exact(g, _budgets(args)).to_json())


def cmd_lambda_plus(args, out) -> int:
    return _scalar_cmd(args, out, "lambda_plus", lambda g: upper_edge_connectivity(g).value)


def cmd_verify(args, out) -> int:
    _, g = _single(args)
    with open(args.coloring) as fh:
        obj = json.load(fh)
    if "cuts" in obj and obj["cuts"]:
        cert = RdCertificate.from_json(obj, g)
        reason = check_certificate(g, cert)
        result = {"valid": reason is None, "kind": "certificate"}
        if reason is not None:
            result["reason"] = reason
    else:
        coloring = EdgeColoring.from_json(obj, g)
        verdict = verify_rd_coloring(g, coloring)
        result = {"valid": bool(verdict), "kind": "coloring"}
        if not verdict:
            result["failing_pair"] = list(verdict.failing_pair)
    _emit(out, dumps(result))
    return EXIT_OK if result["valid"] else EXIT_FAIL


def cmd_construct(args, out) -> int:
    _, g = _single(args)
    if args.method == "three-halves":
        col = rd_upper_three_halves(g)
    elif args.method == "min-bound":
        col = rd_upper_min_bound(g)
    else:
        col = rd_upper_vertex_removal(g, args.vertex)
    if args.format == "dot":
        out.write(to_dot(g, col))
        return EXIT_OK
    if args.certificate:
        verdict = verify_rd_coloring(g, col)
        _emit(out, dumps(verdict.certificate.to_json(g)))
    else:
        _emit(out, dumps(col.to_json(g)))
    return EXIT_OK


def cmd_scan(args, out) -> int:
    opts = ScanOptions(mode=args.mode, budgets=_budgets(args), check_chi=args.mode == "exact")
    name = args.corpus or args.input
    report = conjecture_scan(_input_codes(args), opts, workers=args.workers, corpus=name)
    sink = open(args.output, "w") if args.output else out
    try:
        for rec in report.records:
            _emit(sink, dumps(rec))
        _emit(sink, dumps({"summary": report.summary()}))
    finally:
        if args.output:
            sink.close()
    if args.output:
        _emit(out, dumps({"summary": report.summary()}))
    if report.violations:
        return EXIT_FAIL
    return EXIT_BUDGET if report.unresolved else EXIT_OK


def cmd_ng(args, out) -> int:
    code = EXIT_OK
    for _, g in _graphs(args):
        rec = nordhaus_gaddum_check(g, _budgets(args))
        _emit(out, dumps(rec.to_json()))
        if not rec.consistent:
            code = EXIT_FAIL
    return code


def cmd_line(args, out) -> int:
    code = EXIT_OK
    for g6, g in _graphs(args):
        lg = line_graph(g).graph
        rep = rd_vs_rvd_line_check(g, _budgets(args))
        obj = rep.to_json()
        obj.update(graph6=g6, line_graph6=to_graph6(lg))
        _emit(out, dumps(obj))
        if rep.inequality_holds is False or rep.delta4_conclusion is False:
            code = EXIT_FAIL
        elif rep.inequality_holds is None and code == EXIT_OK:
            code = EXIT_BUDGET
    return code


def cmd_family(args, out) -> int:
    for spec in args.specs:
        _emit(out, to_graph6(parse_family_spec(spec)))
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser, corpus_ok: bool = False) -> None:
    p.add_argument("input", nargs="?", default="-",
                   help="graph6 file, one graph per line ('-' for stdin)")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--family", help="named family, e.g. petersen, wheel:6, grid:2,3")
    grp.add_argument("--g6", help="a single graph6 string")
    if corpus_ok:
        grp.add_argument("--corpus", choices=corpus.NAMES, help="bundled corpus")


def _add_budgets(p: argparse.ArgumentParser) -> None:
    d = Budgets()
    p.add_argument("--max-edges", type=int, default=d.max_rd_edges,
                   help="edge limit per block for exact rd")
    p.add_argument("--max-chi-edges", type=int, default=d.max_chi_edges)
    p.add_argument("--max-rvd-vertices", type=int, default=d.max_rvd_vertices)
    p.add_argument("--max-nodes", type=int, default=None, help="search-node cap per exact search")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowdc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="lambda+, chi', constructive upper bounds and exact rd")
    _add_input(p, corpus_ok=True)
    _add_budgets(p)
    p.set_defaults(fn=cmd_bounds)

    for name, fn, help_ in (("rd", cmd_rd, "exact rainbow disconnection number"),
                            ("chi", cmd_chi, "exact chromatic index"),
                            ("lambda-plus", cmd_lambda_plus, "upper edge-connectivity")):
        p = sub.add_parser(name, help=help_)
        _add_input(p, corpus_ok=True)
        _add_budgets(p)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(fn=fn)

    p = sub.add_parser("verify", help="check a coloring or certificate JSON against a graph")
    _add_input(p)
    p.add_argument("--coloring", required=True, help="EdgeColoring or RdCertificate JSON file")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("construct", help="emit a verified rainbow disconnection coloring")
    _add_input(p)
    p.add_argument("--method", required=True, choices=("vertex-removal", "three-halves", "min-bound"))
    p.add_argument("--vertex", type=int, default=0, help="removed vertex for vertex-removal")
    p.add_argument("--certificate", action="store_true", help="include per-pair cut certificates")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("scan", help="conjecture scan over a graph6 stream")
    _add_input(p, corpus_ok=True)
    _add_budgets(p)
    p.add_argument("--mode", choices=("exact", "witness"), default="exact")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", help="write JSON-lines records here instead of stdout")
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("ng", help="Nordhaus-Gaddum check on G and its complement")
    _add_input(p, corpus_ok=True)
    _add_budgets(p)
    p.set_defaults(fn=cmd_ng)

    p = sub.add_parser("line", help="line graph and rd(G) <= rvd(L(G)) report")
    _add_input(p, corpus_ok=True)
    _add_budgets(p)
    p.set_defaults(fn=cmd_line)

    p = sub.add_parser("family", help="print named family graphs as graph6")
    p.add_argument("specs", nargs="+", help="e.g. petersen wheel:6 complete_multipartite:2,3")
    p.set_defaults(fn=cmd_family)
    return parser


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in ("max_edges", "max_chi_edges", "max_rvd_vertices", "max_nodes", "workers"):
        val = getattr(args, flag, None)
        if val is not None and val <= 0:
            parser.error(f"--{flag.replace('_', '-')} must be positive")
    try:
        return args.fn(args, out)
    except (GraphError, UsageError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"rainbowdc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
