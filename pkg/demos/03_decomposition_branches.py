"""The constructions behind the decomposition search, on weighted cycle chains.

A chain is a sequence of weight-3 odd cycles joined by weight-3 paths.  Far
apart cycles trigger the two-cycle construction; otherwise balls and grown
paths in up to three cycles are tried.  Whatever a construction produces is
only returned after four independent checks.
"""

from __future__ import annotations

from oddcolour import WeightedGraph, find_B, validate_decomposition


def chain(length: int, gap: int, count: int = 2) -> WeightedGraph:
    edges, n, prev = [], 0, None
    for _ in range(count):
        base = n
        edges += [(base + i, base + (i + 1) % length, 3) for i in range(length)]
        n += length
        if prev is not None:
            p = prev
            for _ in range(gap - 1):
                edges.append((p, n, 3))
                p, n = n, n + 1
            edges.append((p, base, 3))
        prev = base
    return WeightedGraph.from_edges(n, edges)


def show(name, H, k, t=0):
    dec = find_B(H, k, t)
    print(f"{name}: n = {H.n}, k = {k}: provenance {dec.provenance}, |B| = {len(dec.B)}")
    for cert, res in dec.certificates.items():
        print(f"    {cert:24s} {'pass' if res.passed else 'FAIL'}")
    return dec


# %% Two 251-cycles joined by a long path: the odd cycles are far apart.
show("far pair", chain(251, 210), 376)

# %% Two 101-cycles closer together: the grown-path union succeeds.
dec = show("near pair", chain(101, 60), 151)
state = dec.diagnostics["case_b"]
print("    grown path lengths:", len(state.P1.vertices), len(state.P2.vertices), len(state.P3.vertices))

# %% Certificates explain failure.  On a 15-cycle all arcs but the full
# cycle are bipartite; an arc of 14 fails because adding the last vertex
# closes the cycle, and the witness says so.
C15 = WeightedGraph.from_edges(15, [(i, (i + 1) % 15, 3) for i in range(15)])
bad = validate_decomposition(C15, set(range(14)))
print("\narc of 14 on C15, failed:", bad.failed())
v, cycle = bad.certificates["extensions_bipartite"].witness
print("    adding", v, "closes an odd cycle of weight", cycle.total_weight)
