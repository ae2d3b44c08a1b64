"""Write every graph on at most 8 vertices, up to isomorphism, as graph6.

Graphs on up to 7 vertices come from the networkx atlas.  Every 8-vertex
graph is a 7-vertex graph plus one vertex, so the 8-vertex class is built
by attaching a new vertex to each subset of each 7-vertex graph and
deduplicating (Weisfeiler-Lehman hash buckets, then exact isomorphism).

Usage: python tools/enumerate_graphs.py tests/data/graphs_le8.g6
"""

from __future__ import annotations

import itertools
import sys

import networkx as nx

KNOWN = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def eight_vertex_graphs(seven):
    buckets: dict[str, list[nx.Graph]] = {}
    for base in seven:
        for r in range(8):
            for nbrs in itertools.combinations(range(7), r):
                G = base.copy()
                G.add_node(7)
                G.add_edges_from((7, u) for u in nbrs)
                key = nx.weisfeiler_lehman_graph_hash(G, iterations=3)
                key += str(sorted(d for _, d in G.degree()))
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(G, H) for H in bucket):
                    bucket.append(G)
    return [G for b in buckets.values() for G in b]


def main(path: str) -> None:
    atlas = [G for G in nx.graph_atlas_g() if G.number_of_nodes() <= 7]
    by_n = {n: [G for G in atlas if G.number_of_nodes() == n] for n in range(8)}
    by_n[8] = eight_vertex_graphs(by_n[7])
    for n, gs in by_n.items():
        if len(gs) != KNOWN[n]:
            raise SystemExit(f"{n} vertices: found {len(gs)} graphs, expected {KNOWN[n]}")
    with open(path, "w") as fh:
        for n in range(1, 9):
            for G in by_n[n]:
                fh.write(nx.to_graph6_bytes(G, header=False).decode())
    print({n: len(g) for n, g in by_n.items()})


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/graphs_le8.g6")
