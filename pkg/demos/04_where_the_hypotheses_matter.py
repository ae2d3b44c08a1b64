"""Why both hypotheses are needed, on instances that break one of them.

Generalised Mycielski graphs are 4-chromatic yet have large odd girth
(min(n, 2r + 3) for r shadow levels over C_n), so the minimum-degree
condition cannot be dropped.  Short odd cycles are refused up front.
"""

from __future__ import annotations

import warnings

from oddcolour import chromatic_oracle, colour_graph, gen_cycle, gen_mycielski, odd_girth
from oddcolour.errors import ColouringFailure, OddGirthTooSmall

# %% The Groetzsch graph: 11 vertices, 20 edges, triangle-free, 4-chromatic.
M = gen_mycielski(5, 1)
print("Groetzsch:", M.n, "vertices", M.m, "edges, odd girth", odd_girth(M)[0], "chromatic number", chromatic_oracle(M))

# %% Two shadow levels over C7 keep odd girth 7 and chromatic number 4.
M = gen_mycielski(7, 2)
g = odd_girth(M)[0]
k = (g - 1) // 2
print(f"Mycielski(7, 2): odd girth {g}, min degree {M.min_degree()}, below n/(2k) = {M.n / (2 * k):.2f} for k = {k}")
print("chromatic number", chromatic_oracle(M, limit_n=22))
with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    try:
        colour_graph(M, k, 0)
    except ColouringFailure as exc:
        print("pipeline refuses:", type(exc).__name__)
print("warning issued:", bool(caught))

# %% Odd girth below 2k + 1 is rejected with the short cycle as witness.
try:
    colour_graph(gen_cycle(9), 5, 0)
except OddGirthTooSmall as exc:
    print("\nC9 with k = 5:", exc, " witness:", exc.witness)
