"""Regenerate the graph6 corpus fixtures shipped in src/rainbowdc/data/.

connected_n{2..7}.g6   all connected graphs up to isomorphism (networkx atlas)
cubic_3ec_le10.g6      cubic 3-edge-connected graphs on 4..10 vertices

Needs networkx. Run from the repo root:  python scripts/make_corpus.py
"""

import sys
from pathlib import Path

import networkx as nx

from rainbowdc.graph import Graph
from rainbowdc.io import to_graph6

DATA = Path(__file__).resolve().parents[1] / "src" / "rainbowdc" / "data"

# connected cubic graphs on 4, 6, 8, 10 vertices (OEIS A002851)
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19}


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(idx), tuple(sorted((min(idx[a], idx[b]), max(idx[a], idx[b])) for a, b in h.edges())))


def connected_atlas():
    by_n = {n: [] for n in range(2, 8)}
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 2 <= n <= 7 and nx.is_connected(h):
            by_n[n].append(to_graph6(from_nx(h)))
    return by_n


def cubic_graphs(n):
    """Connected cubic graphs on n vertices up to isomorphism.

    Fills vertices in order; a fresh (degree 0) endpoint is only ever the
    smallest fresh vertex, which removes most relabelings before the final
    isomorphism filter.
    """
    found = []
    adj = [set() for _ in range(n)]

    def rec():
        v = next((x for x in range(n) if len(adj[x]) < 3), None)
        if v is None:
            h = nx.Graph([(a, b) for a in range(n) for b in adj[a] if a < b])
            if nx.is_connected(h) and not any(nx.is_isomorphic(h, f) for f in found):
                found.append(h)
            return
        fresh_taken = False
        lo = max(adj[v]) if adj[v] and max(adj[v]) > v else v
        for w in range(v + 1, n):
            if w in adj[v] or len(adj[w]) >= 3 or w <= lo:
                continue
            if not adj[w]:
                if fresh_taken:
                    continue
                fresh_taken = True
            adj[v].add(w)
            adj[w].add(v)
            rec()
            adj[v].discard(w)
            adj[w].discard(v)

    rec()
    return found


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    for n, codes in connected_atlas().items():
        (DATA / f"connected_n{n}.g6").write_text("\n".join(codes) + "\n")
        print(f"n={n}: {len(codes)} connected graphs")
    cubic = []
    for n in sorted(CUBIC_COUNTS):
        gs = cubic_graphs(n)
        if len(gs) != CUBIC_COUNTS[n]:
            sys.exit(f"cubic n={n}: found {len(gs)}, expected {CUBIC_COUNTS[n]}")
        ec3 = [h for h in gs if nx.edge_connectivity(h) == 3]
        print(f"cubic n={n}: {len(gs)} connected, {len(ec3)} 3-edge-connected")
        cubic += [to_graph6(from_nx(h)) for h in ec3]
    (DATA / "cubic_3ec_le10.g6").write_text("\n".join(cubic) + "\n")


if __name__ == "__main__":
    main()
