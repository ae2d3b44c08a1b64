"""Greedy center selection and the auxiliary weighted graph on the centers.

Centers ``v_1, ..., v_h`` are picked greedily with pairwise disjoint closed
neighbourhoods, each new one touching an earlier neighbourhood by an edge.
The auxiliary graph joins centers ``i`` and ``j`` when their neighbourhoods
are within distance 3 in the host graph, with weight ``distance + 2``.
Auxiliary vertex ``i`` is the ``i``-th center (0-based).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .errors import DisconnectedInput, EmptyGraph, InvalidFamily, InvalidVertex
from .graph_core import SimpleGraph, bfs_distances, connected_components
from .parity import min_odd_cycle_weight
from .weighted import WeightedGraph


@dataclass(frozen=True)
class CenterFamily:
    host: SimpleGraph
    centers: tuple[int, ...]
    neighbourhoods: tuple[frozenset[int], ...]
    covered: frozenset[int]
    residue: frozenset[int]
    owner: dict[int, int] = field(repr=False, compare=False)
    """Maps each vertex of some ``N(v_i)`` to ``i``."""

    @classmethod
    def from_centers(cls, G: SimpleGraph, centers) -> CenterFamily:
        """Build a family from explicit centers (invariants not enforced)."""
        centers = tuple(centers)
        for c in centers:
            if not 0 <= c < G.n:
                raise InvalidVertex(f"center {c} not in graph")
        nbhds = tuple(frozenset(G.neighbours(c)) for c in centers)
        covered = frozenset(centers).union(*nbhds) if centers else frozenset()
        owner = {}
        for i, N in enumerate(nbhds):
            for x in N:
                owner.setdefault(x, i)
        residue = frozenset(range(G.n)) - covered
        return cls(G, centers, nbhds, covered, residue, owner)

    @property
    def h(self) -> int:
        return len(self.centers)

    def closed(self, i: int) -> frozenset[int]:
        return self.neighbourhoods[i] | {self.centers[i]}

    def violations(self) -> list[str]:
        """Human-readable invariant violations; empty when the family is valid."""
        out = []
        G = self.host
        seen: set[int] = set()
        for i in range(self.h):
            cl = self.closed(i)
            if cl & seen:
                out.append(f"closed neighbourhood of center {i} meets earlier ones")
            seen |= cl
            if i > 0:
                Ni = self.neighbourhoods[i]
                if not any(self.owner.get(y, i) < i for x in Ni for y in G.neighbours(x)):
                    out.append(f"center {i} has no edge to an earlier neighbourhood")
        if frozenset(seen) != self.covered:
            out.append("covered set is not the union of closed neighbourhoods")
        if self.residue != frozenset(range(G.n)) - self.covered:
            out.append("residue is not the complement of the covered set")
        return out


def select_centers(G: SimpleGraph, seed: int | None = None) -> CenterFamily:
    """Greedy maximal center family; the lowest-index candidate wins each step.

    ``seed`` defaults to vertex 0.
    """
    if G.n == 0:
        raise EmptyGraph("graph has no vertices")
    if len(connected_components(G)) != 1:
        raise DisconnectedInput("select_centers needs a connected graph")
    v1 = 0 if seed is None else seed
    if not 0 <= v1 < G.n:
        raise InvalidVertex(f"seed {v1} not in graph")
    adj = G.adjacency
    covered = {v1, *adj[v1]}
    centers = [v1]
    heap: list[int] = []
    pushed: set[int] = set()

    def offer(center: int) -> None:
        # every v with N(v) adjacent to N(center) becomes a candidate
        for y in adj[center]:
            for x in adj[y]:
                for v in adj[x]:
                    if v not in pushed:
                        pushed.add(v)
                        heapq.heappush(heap, v)

    offer(v1)
    while heap:
        v = heapq.heappop(heap)
        # disjointness failures are permanent since the covered set only grows
        if v in covered or any(u in covered for u in adj[v]):
            continue
        centers.append(v)
        covered.add(v)
        covered.update(adj[v])
        offer(v)
    return CenterFamily.from_centers(G, centers)


def neighbourhood_distances(G: SimpleGraph, F: CenterFamily, bound: int = 3) -> dict[tuple[int, int], int]:
    """``d(N(v_i), N(v_j))`` for all pairs ``i < j`` within ``bound``."""
    out: dict[tuple[int, int], int] = {}
    owner = F.owner
    for i, Ni in enumerate(F.neighbourhoods):
        dist = bfs_distances(G, Ni, limit=bound)
        for y, d in dist.items():
            j = owner.get(y)
            if j is not None and j > i:
                key = (i, j)
                if d < out.get(key, bound + 1):
                    out[key] = d
    return out


def build_auxiliary(G: SimpleGraph, F: CenterFamily) -> WeightedGraph:
    """Auxiliary weighted graph with its weight-3 spanning tree attached."""
    if F.host is not G and F.host != G:
        raise InvalidFamily("family belongs to a different graph")
    bad = F.violations()
    if bad:
        raise InvalidFamily("; ".join(bad))
    dists = neighbourhood_distances(G, F)
    edges = [(i, j, d + 2) for (i, j), d in sorted(dists.items())]
    tree = []
    for j in range(1, F.h):
        i = next((i for i in range(j) if dists.get((i, j)) == 1), None)
        if i is None:
            raise InvalidFamily(f"center {j} has no weight-3 edge to an earlier center")
        tree.append((i, j))
    return WeightedGraph.from_edges(F.h, edges, tree_edges=tree)


@dataclass(frozen=True)
class PropertyCheck:
    passed: bool
    counterexample: object = None
    applicable: bool = True


@dataclass(frozen=True)
class PropertyReport:
    checks: dict[str, PropertyCheck]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failed(self) -> list[str]:
        return [name for name, c in self.checks.items() if not c.passed]

    def __getitem__(self, name: str) -> PropertyCheck:
        return self.checks[name]


def verify_properties(G: SimpleGraph, F: CenterFamily, H: WeightedGraph, k: int) -> PropertyReport:
    """Check the six structural properties P0-P5 of the construction.

    P2-P5 are reported as passing but not applicable when ``k`` is below the
    value from which they are guaranteed (2, 3, 4, 5 respectively).

    Counterexamples: P0 an odd cycle of ``H``; P1 a residue vertex; P2 an edge
    inside a neighbourhood; P3 an edge inside a second sphere; P4/P5 the host
    path together with the offending pair of centers.
    """
    adj = G.adjacency
    owner = F.owner
    checks = {}

    mow, witness = min_odd_cycle_weight(H)
    checks["P0"] = PropertyCheck(mow >= 2 * k + 1, None if mow >= 2 * k + 1 else witness)

    bad_x = next((x for x in sorted(F.residue) if not any(u in owner for u in adj[x])), None)
    checks["P1"] = PropertyCheck(bad_x is None, bad_x)

    p2 = None
    for i, Ni in enumerate(F.neighbourhoods):
        p2 = next(((i, (p, q)) for p in sorted(Ni) for q in adj[p] if q in Ni and p < q), None)
        if p2:
            break
    checks["P2"] = PropertyCheck(p2 is None, p2)

    p3 = None
    for i, c in enumerate(F.centers):
        dist = bfs_distances(G, [c], limit=2)
        sphere = {u for u, d in dist.items() if d == 2}
        p3 = next(((i, (p, q)) for p in sorted(sphere) for q in adj[p] if q in sphere and p < q), None)
        if p3:
            break
    checks["P3"] = PropertyCheck(p3 is None, p3)

    # attach[x] = {center j: a neighbour of x in N(v_j)}
    attach: list[dict[int, int]] = []
    for x in range(G.n):
        a: dict[int, int] = {}
        for p in adj[x]:
            j = owner.get(p)
            if j is not None and j not in a:
                a[j] = p
        attach.append(a)

    p4 = None
    for x in range(G.n):
        js = sorted(attach[x])
        for ai, i in enumerate(js):
            for j in js[ai + 1 :]:
                if not (H.skeleton.has_edge(i, j) and H.w(i, j) == 4):
                    p4 = ((i, j), (attach[x][i], x, attach[x][j]))
                    break
            if p4:
                break
        if p4:
            break
    checks["P4"] = PropertyCheck(p4 is None, p4)

    p5 = None
    for x in range(G.n):
        for y in adj[x]:
            for i in attach[x]:
                ps = [p for p in adj[x] if owner.get(p) == i and p != y]
                if not ps:
                    continue
                for j in attach[y]:
                    if j == i:
                        continue
                    qs = [q for q in adj[y] if owner.get(q) == j and q != x]
                    if not qs:
                        continue
                    if not (H.skeleton.has_edge(i, j) and H.w(i, j) in (3, 5)):
                        p5 = ((i, j), (ps[0], x, y, qs[0]))
                        break
                if p5:
                    break
            if p5:
                break
        if p5:
            break
    checks["P5"] = PropertyCheck(p5 is None, p5)
    for name, k_min in _MIN_K.items():
        if k < k_min:
            checks[name] = PropertyCheck(True, None, applicable=False)
    return PropertyReport(checks)


# properties P2-P5 are only guaranteed from these values of k on
_MIN_K = {"P2": 2, "P3": 3, "P4": 4, "P5": 5}


def effective_t(h: int, k: int, t: int) -> int:
    """Slack actually needed so that ``h <= 2k + t``."""
    return max(t, h - 2 * k)


def residue_attachment(G: SimpleGraph, F: CenterFamily) -> dict[int, list[int]]:
    """For each residue vertex, the sorted centers whose neighbourhood it touches."""
    adj = G.adjacency
    owner = F.owner
    return {x: sorted({owner[u] for u in adj[x] if u in owner}) for x in sorted(F.residue)}


__all__ = [
    "CenterFamily",
    "PropertyCheck",
    "PropertyReport",
    "build_auxiliary",
    "effective_t",
    "neighbourhood_distances",
    "residue_attachment",
    "select_centers",
    "verify_properties",
]
