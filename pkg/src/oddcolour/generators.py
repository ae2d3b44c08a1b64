"""Instance families: cycles, blow-ups, generalised Mycielski graphs and
random members of the weighted family H(k)."""

from __future__ import annotations

import heapq
import random
from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import EvenBase, TooSmall, ZeroSize
from .graph_core import SimpleGraph
from .weighted import WEIGHTS, WeightedGraph


def gen_cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise TooSmall(f"a cycle needs at least 3 vertices, got {n}")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_blow_up(G: SimpleGraph, sizes: int | Sequence[int]) -> SimpleGraph:
    """Replace vertex ``v`` by an independent set of ``sizes[v]`` vertices.

    Parts are numbered consecutively: part ``v`` starts after all parts of
    smaller vertices.  Each edge becomes a complete bipartite join.
    """
    if isinstance(sizes, int):
        sizes = [sizes] * G.n
    sizes = list(sizes)
    if len(sizes) != G.n:
        raise ValueError(f"need {G.n} part sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ZeroSize("every part needs at least one vertex")
    offset = [0]
    for s in sizes:
        offset.append(offset[-1] + s)
    edges = []
    for u, v in G.edges():
        for a in range(offset[u], offset[u + 1]):
            for b in range(offset[v], offset[v + 1]):
                edges.append((a, b))
    return SimpleGraph.from_edges(offset[-1], edges)


def gen_mycielski(base_cycle: int, levels: int) -> SimpleGraph:
    """Generalised Mycielski graph over the odd cycle ``C_base_cycle``.

    Level 0 is the cycle; vertex ``(v, l)`` for ``l >= 1`` is joined to the
    level ``l-1`` copies of the cycle neighbours of ``v``; an apex is joined
    to the whole top level.  ``(v, l)`` has index ``l * base_cycle + v`` and
    the apex comes last.
    """
    if base_cycle < 3 or base_cycle % 2 == 0:
        raise EvenBase(f"base cycle must be odd and at least 3, got {base_cycle}")
    if levels < 1:
        raise TooSmall("at least one shadow level is required")
    n = base_cycle
    edges = [(v, (v + 1) % n) for v in range(n)]
    for lvl in range(1, levels + 1):
        for v in range(n):
            for u in ((v - 1) % n, (v + 1) % n):
                edges.append((lvl * n + v, (lvl - 1) * n + u))
    apex = (levels + 1) * n
    edges.extend((levels * n + v, apex) for v in range(n))
    return SimpleGraph.from_edges(apex + 1, edges)


def _parity_distance(adj: list[dict[int, int]], src: int, dst: int, parity: int, bound: int) -> float:
    """Lightest ``src``-``dst`` walk of the given weight parity, if below ``bound``."""
    best = {(src, 0): 0}
    heap = [(0, src, 0)]
    while heap:
        d, v, p = heapq.heappop(heap)
        if d > best.get((v, p), bound):
            continue
        if v == dst and p == parity:
            return d
        for u, w in adj[v].items():
            nd = d + w
            key = (u, p ^ (w & 1))
            if nd < bound and nd < best.get(key, bound):
                best[key] = nd
                heapq.heappush(heap, (nd, u, key[1]))
    return float("inf")


def gen_random_Hk(
    k: int, n: int, edge_bias: float, seed=0, tree_locality: int | None = None
) -> WeightedGraph:
    """Random member of H(k) on ``n`` vertices.

    A random weight-3 spanning tree is grown by attaching the vertices of a
    random permutation one at a time, each to a uniform earlier vertex, or
    to one of the ``tree_locality`` most recent ones (small values give long
    thin trees and hence long odd cycles).  Then every other pair is tried
    with probability ``edge_bias`` with a random weight, and kept only if it
    closes no odd-weight cycle below ``2k + 1``.
    """
    if n < 1:
        raise TooSmall("need at least one vertex")
    if k < 2:
        raise TooSmall("k must be at least 2")
    if not 0 <= edge_bias <= 1:
        raise ValueError("edge_bias must lie in [0, 1]")
    if tree_locality is not None and tree_locality < 1:
        raise ValueError("tree_locality must be positive")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    adj: list[dict[int, int]] = [dict() for _ in range(n)]
    tree = []
    for i in range(1, n):
        lo = 0 if tree_locality is None else max(0, i - tree_locality)
        u, v = order[i], order[rng.randrange(lo, i)]
        adj[u][v] = adj[v][u] = 3
        tree.append((u, v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if v not in adj[u]]
    rng.shuffle(pairs)
    limit = 2 * k + 1
    for u, v in pairs:
        if rng.random() >= edge_bias:
            continue
        w = rng.choice(WEIGHTS)
        # a new odd cycle uses the edge once plus a u-v walk of opposite parity
        if w + _parity_distance(adj, u, v, (w + 1) & 1, limit - w) < limit:
            continue
        adj[u][v] = adj[v][u] = w
    edges = [(u, v, w) for u in range(n) for v, w in adj[u].items() if u < v]
    return WeightedGraph.from_edges(n, edges, tree_edges=tree)


FAMILIES = ("cycle", "blow_up", "mycielski", "random_Hk")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    parameters: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")

    def build(self):
        return generate(self)


def generate(spec: GeneratorSpec):
    p = dict(spec.parameters)
    if spec.family == "cycle":
        return gen_cycle(int(p["n"]))
    if spec.family == "blow_up":
        base = p.get("base")
        if base is None:
            base = gen_cycle(int(p["cycle"]))
        return gen_blow_up(base, p["sizes"])
    if spec.family == "mycielski":
        return gen_mycielski(int(p["base_cycle"]), int(p["levels"]))
    loc = p.get("tree_locality")
    return gen_random_Hk(
        int(p["k"]), int(p["n"]), float(p.get("edge_bias", 0.3)), spec.seed, None if loc is None else int(loc)
    )


__all__ = [
    "FAMILIES",
    "GeneratorSpec",
    "gen_blow_up",
    "gen_cycle",
    "gen_mycielski",
    "gen_random_Hk",
    "generate",
]
