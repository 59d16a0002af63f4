"""rd and lambda+ of small grids P_m x P_n, with the pair that attains lambda+.

    python scripts/grid_values.py --max-m 3 --max-n 6
"""

import argparse

from rainbowdc.connectivity import min_edge_cut, upper_edge_connectivity
from rainbowdc.families import grid
from rainbowdc.rainbow import rd_exact


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args(argv)
    print(f"{'grid':>6} {'rd':>3} {'lam+':>4}  attaining pair and min cut")
    for m in range(1, args.max_m + 1):
        for n in range(max(m, 2), args.max_n + 1):
            g = grid(m, n)
            up = upper_edge_connectivity(g)
            cut = min_edge_cut(g, *up.pair)
            rd = rd_exact(g).to_json()
            edges = [g.edges[e] for e in cut.crossing_edges]
            print(f"{m}x{n:<4} {rd!s:>3} {up.value:>4}  {up.pair} {edges}")


if __name__ == "__main__":
    main()
