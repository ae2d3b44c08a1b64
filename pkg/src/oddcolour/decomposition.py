"""Finding the decomposition set B of an auxiliary weighted graph.

The set B must be connected, have a weighted bipartite complement, and stay
weighted bipartite when any single vertex is added.  The builders here also
aim for the stronger property that ``N[B]`` is weighted bipartite.

Every candidate is certified by :func:`validate_decomposition` before it is
returned; the structural results behind the constructions are only trusted
in the sense that they explain why a branch is expected to succeed.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    Disconnected,
    HypothesisFailed,
    InvalidStart,
    NotInFamily,
    DecompositionFailed,
    OddColourError,
    PreconditionFailed,
    ResultNotBipartite,
    SpanningCycle,
    TooClose,
    WholeCycleBipartite,
)
from .graph_core import (
    _tree_cycle,
    as_vertex_set,
    closed_neighbourhood,
    interior,
    is_connected_induced,
    set_distance,
)
from .parity import (
    OddCycleWitness,
    ParityUnionFind,
    check_membership,
    is_weighted_bipartite,
    min_odd_cycle_weight,
    odd_weight_cycle,
    weight3_spanning_tree,
)
from .weighted import PathWitness, WeightedGraph, dijkstra, edge_key, lightest_path, weighted_ball

log = logging.getLogger(__name__)

GROWTH_RADIUS = 16
COMBINE_RADIUS = 3


def far_distance(t: int) -> int:
    """Weighted separation threshold between odd cycles, ``610 + 5t``."""
    return 610 + 5 * t


def guaranteed_k(t: int) -> int:
    """Smallest ``k`` for which the constructions are guaranteed to succeed."""
    return 9 * far_distance(t)


class GrowthMode(str, Enum):
    UNWEIGHTED_MIDDLE = "unweighted_middle"
    WEIGHTED_MIDDLE = "weighted_middle"


@dataclass(frozen=True)
class Certificate:
    passed: bool
    witness: object = None


CERTIFICATE_NAMES = ("connected", "neighbourhood_bipartite", "complement_bipartite", "extensions_bipartite")


@dataclass(frozen=True)
class Decomposition:
    B: frozenset[int]
    certificates: dict[str, Certificate]
    provenance: str
    diagnostics: dict = field(default_factory=dict, compare=False)

    @property
    def valid(self) -> bool:
        """All four certificates pass (including the ``N[B]`` check)."""
        return all(c.passed for c in self.certificates.values())

    @property
    def sufficient(self) -> bool:
        """The three properties the colouring step needs."""
        c = self.certificates
        return c["connected"].passed and c["complement_bipartite"].passed and c["extensions_bipartite"].passed

    def failed(self) -> list[str]:
        return [n for n, c in self.certificates.items() if not c.passed]


@dataclass
class CaseBState:
    """Intermediate objects of the three-cycle construction, for diagnostics."""

    l0: int
    C1: OddCycleWitness | None = None
    x1: int | None = None
    T1: frozenset[int] | None = None
    C2: OddCycleWitness | None = None
    x2: int | None = None
    T2: frozenset[int] | None = None
    C3: OddCycleWitness | None = None
    s1: int | None = None
    s2: int | None = None
    s3: int | None = None
    P1: PathWitness | None = None
    P2: PathWitness | None = None
    P3: PathWitness | None = None
    P: PathWitness | None = None
    P_prime: PathWitness | None = None
    P_double_prime: PathWitness | None = None


# -- certificates ---------------------------------------------------------------


def _labels_and_forest(H: WeightedGraph, S: frozenset[int]):
    """Parity labels, BFS forest and component ids of ``H[S]`` (or odd cycle)."""
    wadj = H.wadj
    label: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    comp: dict[int, int] = {}
    for s in sorted(S):
        if s in label:
            continue
        label[s], parent[s], depth[s], comp[s] = 0, None, 0, s
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u, w in wadj[v]:
                if u not in S:
                    continue
                want = label[v] ^ (w & 1)
                if u not in label:
                    label[u], parent[u], depth[u], comp[u] = want, v, depth[v] + 1, s
                    queue.append(u)
                elif label[u] != want:
                    return None, _tree_cycle(parent, depth, v, u)
    return (label, parent, depth, comp), None


def _extension_certificate(H: WeightedGraph, B: frozenset[int]) -> Certificate:
    """``H[B + v]`` weighted bipartite for every vertex ``v`` (``H[B]`` included).

    With a parity labelling of ``H[B]`` fixed per component, adding ``v``
    keeps ``H[B + v]`` weighted bipartite iff, inside each component, all
    edges from ``v`` demand the same label for ``v``.
    """
    data, cyc = _labels_and_forest(H, B)
    if data is None:
        return Certificate(False, ("inside", OddCycleWitness(tuple(cyc), H.cycle_weight(cyc))))
    label, parent, depth, comp = data
    wadj = H.wadj
    for v in range(H.n):
        if v in B:
            continue
        demand: dict[int, tuple[int, int]] = {}
        for a, w in wadj[v]:
            if a not in B:
                continue
            need = label[a] ^ (w & 1)
            c = comp[a]
            if c not in demand:
                demand[c] = (need, a)
            elif demand[c][0] != need:
                # v plus the forest path between its two B-neighbours
                cycle = [v] + _tree_cycle(parent, depth, a, demand[c][1])
                return Certificate(False, (v, OddCycleWitness(tuple(cycle), H.cycle_weight(cycle))))
    return Certificate(True)


def validate_decomposition(H: WeightedGraph, B: Iterable[int], provenance: str = "external") -> Decomposition:
    """Run the four checks on ``B`` from scratch."""
    B = as_vertex_set(H.skeleton, B)
    skel = H.skeleton
    certs: dict[str, Certificate] = {}
    connected = is_connected_induced(skel, B)
    certs["connected"] = Certificate(connected, None if connected else "H[B] is disconnected")
    cyc = odd_weight_cycle(H, closed_neighbourhood(skel, B, 1))
    certs["neighbourhood_bipartite"] = Certificate(cyc is None, cyc)
    cyc = odd_weight_cycle(H, frozenset(range(H.n)) - B)
    certs["complement_bipartite"] = Certificate(cyc is None, cyc)
    certs["extensions_bipartite"] = _extension_certificate(H, B)
    return Decomposition(B, certs, provenance)


# -- building blocks -------------------------------------------------------------


def grow_path_in_cycle(
    H: WeightedGraph,
    C: OddCycleWitness,
    p: int,
    i: int,
    mode: GrowthMode | str = GrowthMode.UNWEIGHTED_MIDDLE,
) -> PathWitness:
    """Grow a sub-path of ``C`` around ``p`` while ``N^i[P]`` stays weighted bipartite.

    Each step extends one end by its next cycle vertex ``u``; growth stops the
    first time ``N^i[P + u]`` would contain an odd-weight cycle.  In
    unweighted-middle mode the shorter arm (by vertex count) is extended, in
    weighted-middle mode the candidate with the smaller weighted distance to
    ``p`` along ``C``; ties extend forward along ``C``.
    The returned path runs from its backward end to its forward end.
    """
    mode = GrowthMode(mode)
    cyc = C.vertices
    L = len(cyc)
    if p not in cyc:
        raise InvalidStart(f"vertex {p} is not on the cycle")
    if i < 0:
        raise ValueError("radius must be non-negative")
    skel = H.skeleton
    if is_weighted_bipartite(H, closed_neighbourhood(skel, cyc, i)):
        raise WholeCycleBipartite("the whole cycle has a weighted bipartite neighbourhood")
    idx = cyc.index(p)
    uf = ParityUnionFind(H)
    if not uf.add_all(closed_neighbourhood(skel, [p], i)):
        raise HypothesisFailed(f"N^{i}[{p}] is not weighted bipartite")
    back = fwd = 0
    wback = wfwd = 0
    while back + fwd + 1 < L:
        f_end, f_new = cyc[(idx + fwd) % L], cyc[(idx + fwd + 1) % L]
        b_end, b_new = cyc[(idx - back) % L], cyc[(idx - back - 1) % L]
        if mode is GrowthMode.UNWEIGHTED_MIDDLE:
            forward = fwd <= back
        else:
            # the candidate closer to p along the cycle
            forward = wfwd + H.w(f_end, f_new) <= wback + H.w(b_end, b_new)
        end, u = (f_end, f_new) if forward else (b_end, b_new)
        # the set only grows, so a failed extension is final
        if not uf.add_all(closed_neighbourhood(skel, [u], i)):
            break
        w = H.w(end, u)
        if forward:
            fwd += 1
            wfwd += w
        else:
            back += 1
            wback += w
    verts = tuple(cyc[(idx + d) % L] for d in range(-back, fwd + 1))
    return PathWitness(verts, H.path_weight(verts))


def growth_bound(k: int, i: int) -> int:
    """Lower bound ``ceil(2k/3 - 10i/3 - 5)`` on ``|N^1[P]|`` for grown paths."""
    return max(0, math.ceil((2 * k - 10 * i - 15) / 3))


def _union_ball(H: WeightedGraph, parts: Iterable[Iterable[int]], i: int) -> frozenset[int]:
    union = set()
    for part in parts:
        union.update(part)
    return closed_neighbourhood(H.skeleton, union, i)


def _combine(H: WeightedGraph, B1, B2, i: int, path: PathWitness | None = None):
    B1 = as_vertex_set(H.skeleton, B1)
    B2 = as_vertex_set(H.skeleton, B2)
    d = set_distance(H.skeleton, B1, B2)
    if d < 2 * i + 2:
        raise TooClose(f"d(B1, B2) = {d} < {2 * i + 2}")
    for name, S in (("B1", B1), ("B2", B2)):
        cyc = odd_weight_cycle(H, closed_neighbourhood(H.skeleton, S, 3 * i + 1))
        if cyc is not None:
            raise HypothesisFailed(f"N^{3 * i + 1}[{name}] is not weighted bipartite", cyc)
    if path is None:
        path = lightest_path(H, B1, B2)
    R = _union_ball(H, (B1, B2, path.vertices), i)
    cyc = odd_weight_cycle(H, R)
    if cyc is not None:
        raise ResultNotBipartite("combined neighbourhood has an odd-weight cycle", cyc)
    return R, path


def combine_bipartite_sets(H: WeightedGraph, B1: Iterable[int], B2: Iterable[int], i: int) -> frozenset[int]:
    """``N^i[B1 + B2 + P]`` for a lightest ``B1``-``B2`` path ``P``, verified.

    Requires ``d(B1, B2) >= 2i + 2`` and weighted bipartite ``N^{3i+1}`` balls
    around both sets.
    """
    R, _ = _combine(H, B1, B2, i)
    return R


def cycle_neighbourhood_bound(H: WeightedGraph, k: int, C: OddCycleWitness) -> bool:
    """``|N^1[C]| >= ceil((2k+1)/3)`` for a non-spanning odd-weight cycle."""
    if len(set(C.vertices)) == H.n:
        raise SpanningCycle("cycle covers every vertex")
    if H.cycle_weight(C.vertices) % 2 == 0:
        raise ValueError("cycle weight is even")
    return len(closed_neighbourhood(H.skeleton, C.vertices, 1)) >= math.ceil((2 * k + 1) / 3)


def _weight11_triangle(F: WeightedGraph):
    for u, v, w in F.edges():
        for x, w2 in F.wadj[u]:
            if x > v and F.skeleton.has_edge(v, x) and w + w2 + F.w(v, x) == 11:
                return (u, v, x)
    return None


def path_neighbourhood_bound(F: WeightedGraph, P: PathWitness, ell: int, variant: str = "minimal_path") -> bool:
    """Neighbourhood-size bound for a path in a tree-plus-path graph.

    ``minimal_path``: ``|N^1[P]| >= ell/3 + 5/3``; ``odd_girth``:
    ``|N^1[P]| >= ell/3 + 4/3``.  Violated hypotheses raise
    :class:`PreconditionFailed` naming the clause.
    """
    if variant not in ("minimal_path", "odd_girth"):
        raise ValueError(f"unknown variant {variant!r}")
    verts = P.vertices
    if len(set(verts)) != len(verts):
        raise PreconditionFailed("P must be a path")
    for a, b in zip(verts, verts[1:]):
        if not F.skeleton.has_edge(a, b):
            raise PreconditionFailed("P must be a path of F")
    if len(verts) >= F.n:
        raise PreconditionFailed("P must not be spanning")
    tree = F.tree_edges if F.tree_edges is not None else weight3_spanning_tree(F)
    if tree is None:
        raise PreconditionFailed("F needs a spanning tree of weight-3 edges")
    path_edges = {edge_key(a, b) for a, b in zip(verts, verts[1:])}
    extra = [(u, v) for u, v, _ in F.edges() if (u, v) not in tree and (u, v) not in path_edges]
    if extra:
        raise PreconditionFailed(f"F must be T + P; edge {extra[0]} is in neither")
    x, y = verts[0], verts[-1]
    nbhd = closed_neighbourhood(F.skeleton, verts, 1)
    if variant == "minimal_path":
        if F.path_weight(verts) != ell:
            raise PreconditionFailed("w(P) must equal ell")
        if _weight11_triangle(F) is not None:
            raise PreconditionFailed("F has a cycle of weight 11")
        d = dijkstra(F, [x], allowed=nbhd).get(y, math.inf)
        if d < F.path_weight(verts):
            raise PreconditionFailed("P is not lightest among x-y paths inside N^1[P]")
        return 3 * len(nbhd) >= ell + 5
    if ell < 13 or ell % 2 == 0:
        raise PreconditionFailed("ell must be an odd integer >= 13")
    mow, _ = min_odd_cycle_weight(F)
    if mow < ell + 4:
        raise PreconditionFailed("F has an odd-weight cycle below ell + 4")
    if dijkstra(F, [x]).get(y, math.inf) < ell:
        raise PreconditionFailed("some x-y path weighs less than ell")
    return 3 * len(nbhd) >= ell + 4


def interior_threshold(k: int, t: int) -> int:
    return math.ceil(4 * k / 3) + t


def interior_check(H: WeightedGraph, k: int, t: int, B: Iterable[int]) -> bool:
    """``|int(B)| >= ceil(4k/3) + t``."""
    return len(interior(H.skeleton, B)) >= interior_threshold(k, t)


# -- the driver -----------------------------------------------------------------------


def _nearest(H: WeightedGraph, candidates: Iterable[int], target: Iterable[int]) -> int:
    """Candidate of least weighted distance to ``target``; ties by index."""
    dist = dijkstra(H, target)
    cands = sorted(candidates)
    return min(cands, key=lambda v: (dist.get(v, math.inf), v))


def _trim_centered(P: PathWitness, centre: int, max_len: int, H: WeightedGraph) -> PathWitness:
    verts = list(P.vertices)
    max_len = max(1, max_len)
    while len(verts) > max_len:
        j = verts.index(centre)
        if len(verts) - 1 - j >= j:
            verts.pop()
        else:
            verts.pop(0)
    return PathWitness(tuple(verts), H.path_weight(verts))


def _sub_path(P: PathWitness, first_in: frozenset[int], last_in: frozenset[int], H) -> PathWitness:
    """Segment of ``P`` from its last vertex in ``first_in`` to the next one in ``last_in``."""
    verts = P.vertices
    starts = [j for j, v in enumerate(verts) if v in first_in]
    if not starts:
        raise HypothesisFailed("lightest path misses the first grown path")
    a = starts[-1]
    b = next((j for j in range(a, len(verts)) if verts[j] in last_in), None)
    if b is None:
        raise HypothesisFailed("lightest path misses the second grown path")
    seg = verts[a : b + 1]
    return PathWitness(seg, H.path_weight(seg))


def _case_a(H, k, t, C1, C2, attempt):
    P = lightest_path(H, C1.vertices, C2.vertices)
    p1, p2 = P.ends
    B1 = grow_path_in_cycle(H, C1, p1, GROWTH_RADIUS, GrowthMode.UNWEIGHTED_MIDDLE)
    B2 = grow_path_in_cycle(H, C2, p2, GROWTH_RADIUS, GrowthMode.UNWEIGHTED_MIDDLE)
    _, Q = _combine(H, B1.vertices, B2.vertices, COMBINE_RADIUS)
    B = _union_ball(H, (B1.vertices, B2.vertices, Q.vertices), 2)
    return attempt(B, "caseA", {"P": P, "B1": B1, "B2": B2, "Q": Q})


def _case_b(H, k, t, C1, state: CaseBState, attempt):
    n = H.n
    allv = frozenset(range(n))
    skel = H.skeleton
    radius = max(k - 8, 0)
    state.C1 = C1
    state.x1 = x1 = min(C1.vertices)
    state.T1 = T1 = weighted_ball(H, x1, radius)
    _, C2 = min_odd_cycle_weight(H, allv - T1)
    if C2 is None:
        return attempt(T1, "ball", {"case_b": state})
    state.C2 = C2
    outside = frozenset(C1.vertices) - closed_neighbourhood(skel, T1, 1)
    if not outside:
        raise HypothesisFailed("C1 lies inside N[T1]")
    state.x2 = x2 = _nearest(H, outside, C2.vertices)
    state.T2 = T2 = weighted_ball(H, x2, radius)
    _, C3 = min_odd_cycle_weight(H, allv - T2)
    if C3 is None:
        return attempt(T2, "ball", {"case_b": state})
    state.C3 = C3
    state.P1 = P1 = grow_path_in_cycle(H, C1, x1, GROWTH_RADIUS, GrowthMode.WEIGHTED_MIDDLE)
    state.s1 = s1 = _nearest(H, C1.vertices, C3.vertices)
    state.s2 = s2 = _nearest(H, C2.vertices, C3.vertices)
    state.P2 = P2 = grow_path_in_cycle(H, C2, s2, GROWTH_RADIUS, GrowthMode.WEIGHTED_MIDDLE)
    state.P = P = lightest_path(H, [s1], [s2])
    state.P_prime = Pp = _sub_path(P, frozenset(P1.vertices), frozenset(P2.vertices), H)
    if Pp.total_weight >= state.l0:
        _combine(H, P1.vertices, P2.vertices, COMBINE_RADIUS, path=Pp)
        B = _union_ball(H, (P1.vertices, P2.vertices, Pp.vertices), 2)
        return attempt(B, "caseB-long", {"case_b": state})
    state.s3 = s3 = _nearest(H, C3.vertices, [s2])
    P3 = grow_path_in_cycle(H, C3, s3, GROWTH_RADIUS, GrowthMode.UNWEIGHTED_MIDDLE)
    state.P3 = P3 = _trim_centered(P3, s3, (2 * k) // 3 - 59, H)
    _, Ppp = _combine(H, P1.vertices, P3.vertices, COMBINE_RADIUS)
    state.P_double_prime = Ppp
    B = _union_ball(H, (P1.vertices, Ppp.vertices, P3.vertices), 2)
    return attempt(B, "caseB-short", {"case_b": state})


def _fallback_candidates(H, fallback_limit, ball_search_limit):
    n = H.n
    seen = set()
    if n <= ball_search_limit:
        candidates = []
        for u in range(n):
            dist = dijkstra(H, [u])
            for r in sorted(set(dist.values())):
                candidates.append(frozenset(v for v, d in dist.items() if d <= r))
            for r in range(1, n):
                candidates.append(closed_neighbourhood(H.skeleton, [u], r))
        candidates = sorted(set(candidates), key=lambda S: (len(S), sorted(S)))
        for B in candidates:
            seen.add(B)
            yield B, "balls"
    if n <= fallback_limit:
        skel = H.skeleton
        allv = frozenset(range(n))
        for size in range(1, n + 1):
            for combo in itertools.combinations(range(n), size):
                B = frozenset(combo)
                if B in seen or not is_connected_induced(skel, B):
                    continue
                if not is_weighted_bipartite(H, allv - B):
                    continue
                yield B, "exhaustive"


def iter_decompositions(
    H: WeightedGraph,
    k: int,
    t: int,
    fallback_limit: int = 20,
    strict: bool = True,
    ball_search_limit: int = 400,
    diagnostics: dict | None = None,
) -> Iterator[Decomposition]:
    """Certified decompositions of ``H`` in driver order, without repeats.

    Branch order: bipartite ``H``; two far-apart odd cycles; balls around
    points of a lightest odd cycle; three-cycle path constructions; then
    candidate search (all balls when ``|V(H)| <= ball_search_limit``, all
    connected subsets when ``|V(H)| <= fallback_limit``).  With ``strict``
    every yielded set passes all four certificates; otherwise the candidate
    search also yields sets that only lack the ``N[B]`` certificate.

    ``diagnostics``, if given, is filled with the attempts made so far.
    """
    report = check_membership(H, k, 2 * k + t)
    if not report.is_member:
        raise NotInFamily("auxiliary graph is not in H(k, 2k+t)", report)
    diag = diagnostics if diagnostics is not None else {}
    tried: list[tuple[str, list[str]]] = diag.setdefault("tried", [])
    errors: list[tuple[str, str]] = diag.setdefault("errors", [])
    diag.setdefault("fallback_rejected", 0)
    yielded: set[frozenset[int]] = set()

    def attempt(B, provenance, extra=None):
        if B in yielded:
            return None
        dec = validate_decomposition(H, B, provenance)
        ok = dec.valid or (not strict and provenance == "fallback" and dec.sufficient)
        if provenance != "fallback" or ok:
            tried.append((provenance, dec.failed()))
        if not ok:
            if provenance == "fallback":
                # too many to list one by one
                diag["fallback_rejected"] += 1
            return None
        yielded.add(dec.B)
        info = dict(extra or {})
        info["tried"] = list(tried)
        info["errors"] = list(errors)
        return Decomposition(dec.B, dec.certificates, provenance, info)

    allv = frozenset(range(H.n))
    if odd_weight_cycle(H) is None:
        dec = attempt(allv, "bipartite")
        if dec is not None:
            yield dec
    else:
        _, C1 = min_odd_cycle_weight(H)
        l0 = far_distance(t)
        dist = dijkstra(H, C1.vertices)
        far = frozenset(v for v in allv if dist.get(v, math.inf) >= l0)
        if far:
            _, C2 = min_odd_cycle_weight(H, far)
            if C2 is not None:
                dec = None
                try:
                    dec = _case_a(H, k, t, C1, C2, attempt)
                except (OddColourError, Disconnected) as exc:
                    errors.append(("caseA", f"{type(exc).__name__}: {exc}"))
                if dec is not None:
                    yield dec
        state = CaseBState(l0=l0)
        dec = None
        try:
            dec = _case_b(H, k, t, C1, state, attempt)
        except (OddColourError, Disconnected) as exc:
            errors.append(("caseB", f"{type(exc).__name__}: {exc}"))
        if dec is not None:
            yield dec
    for B, stage in _fallback_candidates(H, fallback_limit, ball_search_limit):
        dec = attempt(B, "fallback", {"stage": stage})
        if dec is not None:
            yield dec


def find_B(
    H: WeightedGraph,
    k: int,
    t: int,
    fallback_limit: int = 20,
    strict: bool = True,
    ball_search_limit: int = 400,
) -> Decomposition:
    """First certified decomposition of ``H`` in H(k, 2k+t); see
    :func:`iter_decompositions` for the branch order.

    Raises :class:`NotInFamily` or :class:`DecompositionFailed`.
    """
    diag: dict = {}
    for dec in iter_decompositions(H, k, t, fallback_limit, strict, ball_search_limit, diag):
        return dec
    log.info("find_B failed after %d certified attempts", len(diag["tried"]))
    diag.update(k=k, t=t, n=H.n)
    raise DecompositionFailed("no certified decomposition found", diag)


__all__ = [
    "CERTIFICATE_NAMES",
    "CaseBState",
    "Certificate",
    "Decomposition",
    "GrowthMode",
    "combine_bipartite_sets",
    "cycle_neighbourhood_bound",
    "far_distance",
    "find_B",
    "grow_path_in_cycle",
    "growth_bound",
    "guaranteed_k",
    "interior_check",
    "interior_threshold",
    "iter_decompositions",
    "path_neighbourhood_bound",
    "validate_decomposition",
]
