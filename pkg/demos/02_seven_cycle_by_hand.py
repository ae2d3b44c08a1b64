"""Every stage of the pipeline on the 7-cycle, small enough to follow by hand.

The centers are chosen greedily with pairwise disjoint closed
neighbourhoods; vertices not covered form the residue.  The auxiliary graph
joins two centers with weight d(N(u), N(v)) + 2 when that is at most 5.
"""

from __future__ import annotations

from oddcolour import build_auxiliary, colour_graph, find_B, gen_cycle, lift_to_A, select_centers, three_colour_from_A

G = gen_cycle(7)

# %% Centers and the auxiliary graph
F = select_centers(G)
H = build_auxiliary(G, F)
print("centers:", F.centers, " residue:", sorted(F.residue))
print("auxiliary edges (u, v, weight):", H.edges())

# %% From a set of centers to a host vertex set A
# Lifting both centers gives A = V, and G[A] then holds the odd cycle.
both = lift_to_A(G, F, {0, 1})
print("\nB = {0, 1}: A =", sorted(both.A), " failed conditions:", both.failed())

# Lifting center 0 alone gives the path 5-6-0-1: connected, its complement
# 2-3-4 is a path, and adding any vertex keeps it bipartite.
one = lift_to_A(G, F, {0})
print("B = {0}:    A =", sorted(one.A), " all conditions hold:", one.passed)

# %% The colouring rule
# G[A] gets colours 1/2 and G - A gets 3/4; each colour-4 vertex then
# becomes 2 if it sees a colour-1 vertex of A and 1 otherwise.
col = three_colour_from_A(G, one.A)
print("\ncolouring:", col.colour, " valid:", col.valid)

# %% The decomposition search ranks B = {0, 1} first, since the whole vertex
# set of a weighted-bipartite auxiliary graph is certified.  The pipeline
# rejects its lift and moves on to the next certified set.
print("\nfirst certified B:", sorted(find_B(H, 3, 0).B))
col = colour_graph(G, 3, 0)
(diag,) = col.diagnostics["components"]
print("pipeline:", col.colour, " lift rejections:", diag["lift_rejections"])
