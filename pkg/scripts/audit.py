"""Corpus audits: conjecture scan, Nordhaus-Gaddum extremal set, rd = n-2 predicate.

Writes JSON-lines records under --out (default ./audit_out) and prints a
one-line summary per audit. Exit status is 1 if any audit finds a mismatch.

    python scripts/audit.py --max-n 7 --workers 1
"""

import argparse
import json
import sys
import time
from pathlib import Path

from rainbowdc.config import Budgets
from rainbowdc.corpus import connected_upto, corpus_lines
from rainbowdc.io import to_graph6
from rainbowdc.rainbow import rd_exact
from rainbowdc.theorems import ScanOptions, characterize_rd_n_minus_2, conjecture_scan, ng_scan


def write_jsonl(path: Path, rows) -> None:
    with path.open("w") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")


def audit_conjecture(max_n, workers, out):
    exact = [c for n in range(2, min(max_n, 6) + 1) for c in corpus_lines(f"connected_n{n}")]
    rep = conjecture_scan(exact, ScanOptions(mode="exact"), workers=workers, corpus="connected_n<=6")
    records = list(rep.records)
    bad = len(rep.violations) + rep.unresolved
    if max_n >= 7:
        rep7 = conjecture_scan(corpus_lines("connected_n7"), ScanOptions(mode="witness"),
                               workers=workers, corpus="connected_n7")
        records += rep7.records
        bad += len(rep7.violations) + rep7.unresolved
    write_jsonl(out / "conjecture.jsonl", records)
    return f"{len(records)} graphs scanned", bad


def audit_ng(max_n, out):
    recs = ng_scan(connected_upto(max_n))
    write_jsonl(out / "ng.jsonl", (r.to_json() for r in recs))
    extremal = sum(r.extremal for r in recs)
    return f"{len(recs)} pairs, {extremal} extremal", sum(not r.consistent for r in recs)


def audit_n_minus_2(max_n, out):
    rows, bad = [], 0
    for g in connected_upto(max_n, n_min=4):
        holds, first = characterize_rd_n_minus_2(g)
        rd = rd_exact(g, Budgets(max_rd_edges=30)).value
        ok = holds == (rd == g.n - 2)
        bad += not ok
        rows.append({"graph6": to_graph6(g), "rd": rd, "predicate": holds, "condition": first, "agree": ok})
    write_jsonl(out / "rd_n_minus_2.jsonl", rows)
    return f"{len(rows)} graphs", bad


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7, choices=range(4, 8))
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("audit_out"))
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name, run in (("conjecture", lambda: audit_conjecture(args.max_n, args.workers, args.out)),
                      ("nordhaus-gaddum", lambda: audit_ng(args.max_n, args.out)),
                      ("rd=n-2 predicate", lambda: audit_n_minus_2(args.max_n, args.out))):
        t0 = time.perf_counter()
        summary, bad = run()
        failed += bad
        print(f"{name:18s} {summary}; mismatches {bad} ({time.perf_counter() - t0:.1f}s)")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
