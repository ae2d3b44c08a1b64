"""From a decomposition set to a proper 3-colouring of the host graph.

``lift_to_A`` turns a set ``B`` of auxiliary vertices into a host vertex set
``A``; when ``G[A]`` is connected, ``G - A`` is bipartite and ``G[A + v]`` is
bipartite for every ``v``, ``three_colour_from_A`` colours ``G`` with three
colours.  ``colour_graph`` runs the whole chain per connected component.
"""

from __future__ import annotations

import logging
import warnings
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field

from .auxiliary import CenterFamily, build_auxiliary, effective_t, select_centers, verify_properties
from .decomposition import iter_decompositions
from .errors import (
    DecompositionFailed,
    EmptyGraph,
    HypothesisFailed,
    InvalidB,
    LiftFailed,
    NotInFamily,
    OddGirthTooSmall,
    TooLarge,
    UncolouredVertex,
)
from .graph_core import (
    SimpleGraph,
    as_vertex_set,
    bipartition,
    connected_components,
    is_connected_induced,
    tree_path,
)
from .parity import check_membership, odd_girth

log = logging.getLogger(__name__)


@dataclass
class Colouring:
    """Colour of every vertex, indexed by vertex; colours are positive ints."""

    colour: tuple[int, ...]
    valid: bool = False
    violating_edge: tuple[int, int] | None = None
    diagnostics: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def colours_used(self) -> frozenset[int]:
        return frozenset(self.colour)

    def __getitem__(self, v: int) -> int:
        return self.colour[v]


@dataclass(frozen=True)
class Check:
    passed: bool
    witness: object = None


@dataclass(frozen=True)
class LiftReport:
    A: frozenset[int]
    A0: frozenset[int]
    X0: frozenset[int]
    checks: dict[str, Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failed(self) -> list[str]:
        return [n for n, c in self.checks.items() if not c.passed]


def validate_colouring(G: SimpleGraph, c: Colouring) -> bool:
    """True iff no edge is monochromatic; updates ``c.valid`` and ``c.violating_edge``."""
    col = c.colour
    if len(col) != G.n:
        raise UncolouredVertex(f"colouring has {len(col)} entries for {G.n} vertices")
    for v, x in enumerate(col):
        if x is None:
            raise UncolouredVertex(f"vertex {v} has no colour")
    for u, v in G.edges():
        if col[u] == col[v]:
            c.valid, c.violating_edge = False, (u, v)
            return False
    c.valid, c.violating_edge = True, None
    return True


def _a3_check(G: SimpleGraph, A: frozenset[int]) -> Check:
    """``G[A + v]`` bipartite for every vertex ``v`` (so ``G[A]`` itself too)."""
    side, cyc, parent = bipartition(G, A)
    if side is None:
        return Check(False, ("inside", cyc))
    comp: dict[int, int] = {}
    for members in connected_components(G, A):
        for x in members:
            comp[x] = members[0]
    adj = G.adjacency
    for v in range(G.n):
        if v in A:
            continue
        seen: dict[int, tuple[int, int]] = {}
        for a in adj[v]:
            if a not in A:
                continue
            c = comp[a]
            if c not in seen:
                seen[c] = (side[a], a)
            elif seen[c][0] != side[a]:
                # v closes an odd cycle with the forest path between a and b
                return Check(False, (v, [v] + tree_path(parent, a, seen[c][1])))
    return Check(True)


def check_lift_conditions(G: SimpleGraph, A: Iterable[int]) -> dict[str, Check]:
    """Evaluate the three conditions the 3-colouring needs on ``A``."""
    A = as_vertex_set(G, A)
    checks = {}
    connected = is_connected_induced(G, A)
    checks["A1"] = Check(connected, None if connected else connected_components(G, A))
    _, cyc, _ = bipartition(G, frozenset(range(G.n)) - A)
    checks["A2"] = Check(cyc is None, cyc)
    checks["A3"] = _a3_check(G, A)
    return checks


def lift_to_A(G: SimpleGraph, F: CenterFamily, B: Iterable[int]) -> LiftReport:
    """``A0`` = closed neighbourhoods of the centers in ``B``; ``A = A0 + X0``
    where ``X0`` are the uncovered vertices adjacent to ``A0``."""
    B = frozenset(B)
    for b in B:
        if not (isinstance(b, int) and 0 <= b < F.h):
            raise InvalidB(f"index {b!r} is not a center index (h = {F.h})")
    A0 = set()
    for b in B:
        A0 |= F.closed(b)
    adj = G.adjacency
    X0 = frozenset(x for x in F.residue if any(u in A0 for u in adj[x]))
    A0 = frozenset(A0)
    A = A0 | X0
    return LiftReport(A, A0, X0, check_lift_conditions(G, A))


def _two_colour(G: SimpleGraph, members: frozenset[int], first: int, colour: list) -> None:
    second = first + 1
    adj = G.adjacency
    for s in sorted(members):
        if colour[s] is not None:
            continue
        colour[s] = first
        queue = deque([s])
        while queue:
            v = queue.popleft()
            want = second if colour[v] == first else first
            for u in adj[v]:
                if u in members and colour[u] is None:
                    colour[u] = want
                    queue.append(u)


def three_colour_from_A(G: SimpleGraph, A: Iterable[int]) -> Colouring:
    """Colour ``G[A]`` with 1/2 and ``G - A`` with 3/4, then recolour each
    colour-4 vertex to 2 if it has a colour-1 neighbour and to 1 otherwise.

    The result is verified; :class:`HypothesisFailed` is raised when ``A``
    does not support a 3-colouring this way.
    """
    A = as_vertex_set(G, A)
    rest = frozenset(range(G.n)) - A
    for name, S in (("G[A]", A), ("G - A", rest)):
        _, cyc, _ = bipartition(G, S)
        if cyc is not None:
            raise HypothesisFailed(f"{name} is not bipartite", cyc)
    colour: list[int | None] = [None] * G.n
    _two_colour(G, A, 1, colour)
    _two_colour(G, rest, 3, colour)
    adj = G.adjacency
    original = list(colour)
    for v in sorted(rest):
        if original[v] != 4:
            continue
        near = {original[u] for u in adj[v] if u in A}
        if near == {1, 2}:
            raise HypothesisFailed(f"vertex {v} sees both colours of G[A]", v)
        colour[v] = 2 if 1 in near else 1
    result = Colouring(tuple(colour))
    if not validate_colouring(G, result):
        raise HypothesisFailed(f"recoloured graph has monochromatic edge {result.violating_edge}", result.violating_edge)
    return result


def chromatic_oracle(G: SimpleGraph, limit_n: int = 12) -> int:
    """Exact chromatic number by backtracking; the first vertex always gets colour 1."""
    n = G.n
    if n > limit_n:
        raise TooLarge(f"{n} vertices exceeds the oracle limit {limit_n}")
    if n == 0:
        return 0
    adj = G.adjacency
    # colour high-degree vertices first
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))

    def colourable(c: int) -> bool:
        col = [0] * n

        def go(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            banned = {col[u] for u in adj[v]}
            # a fresh colour is only tried once, the lowest unused one
            for x in range(1, min(used + 1, c) + 1):
                if x not in banned:
                    col[v] = x
                    if go(i + 1, max(used, x)):
                        return True
            col[v] = 0
            return False

        return go(0, 0)

    c = 1
    while not colourable(c):
        c += 1
    return c


def _colour_component(G: SimpleGraph, k: int, t: int, fallback_limit: int, max_attempts: int):
    diag: dict = {"n": G.n}
    F = select_centers(G)
    H = build_auxiliary(G, F)
    t_eff = effective_t(F.h, k, t)
    diag.update(h=F.h, residue=len(F.residue), t_effective=t_eff)
    if t_eff != t:
        log.info("component needs t' = %d > t = %d", t_eff, t)
    props = verify_properties(G, F, H, k)
    diag["properties_failed"] = props.failed()
    report = check_membership(H, k, 2 * k + t_eff)
    if not report.is_member:
        raise NotInFamily("auxiliary graph is not in the expected family", report)
    search: dict = {}
    lift = None
    attempts = 0
    for dec in iter_decompositions(H, k, t_eff, fallback_limit, strict=False, diagnostics=search):
        attempts += 1
        lift = lift_to_A(G, F, dec.B)
        if lift.passed:
            break
        # the sufficient conditions on B need not lift when k is small
        lift = None
        if attempts >= max_attempts:
            break
    diag.update(decomposition_attempts=attempts, lift_rejections=attempts - (lift is not None))
    if lift is None:
        diag.update(search)
        if attempts == 0:
            raise DecompositionFailed("no certified decomposition found", diag)
        raise LiftFailed("no decomposition lifted to a valid colouring set", diag)
    diag.update(B_size=len(dec.B), provenance=dec.provenance, certificates_failed=dec.failed(), A_size=len(lift.A))
    col = three_colour_from_A(G, lift.A)
    return list(col.colour), diag


def colour_graph(
    G: SimpleGraph, k: int, t: int, fallback_limit: int = 20, max_attempts: int = 1000
) -> Colouring:
    """3-colour ``G`` through the center/auxiliary/decomposition chain.

    Certified decompositions are tried in order until one lifts to a set
    satisfying the colouring conditions, at most ``max_attempts`` per
    component.  Raises :class:`OddGirthTooSmall` if ``G`` has an odd cycle
    shorter than ``2k + 1``; :class:`DecompositionFailed` or
    :class:`LiftFailed` when a stage cannot be certified.  A graph below the minimum-degree bound
    ``n/(2k+t)`` only triggers a warning.
    """
    n = G.n
    if n == 0:
        raise EmptyGraph("graph has no vertices")
    if k < 1:
        raise ValueError("k must be positive")
    girth, witness = odd_girth(G)
    if girth < 2 * k + 1:
        raise OddGirthTooSmall(f"odd girth {girth} < {2 * k + 1}", witness, {"odd_girth": girth})
    if G.min_degree() * (2 * k + t) < n:
        warnings.warn(
            f"minimum degree {G.min_degree()} is below n/(2k+t) = {n / (2 * k + t):.3f}",
            stacklevel=2,
        )
    colour = [0] * n
    diagnostics = {"odd_girth": girth, "components": []}
    for members in connected_components(G):
        sub, labels = G.induced(members)
        try:
            col, diag = _colour_component(sub, k, t, fallback_limit, max_attempts)
        except (DecompositionFailed, LiftFailed, NotInFamily) as exc:
            exc.args = (f"component containing vertex {labels[0]}: {exc.args[0]}",) + exc.args[1:]
            raise
        for i, v in enumerate(labels):
            colour[v] = col[i]
        diagnostics["components"].append(diag)
    result = Colouring(tuple(colour), diagnostics=diagnostics)
    if not validate_colouring(G, result):  # pragma: no cover - guarded by the stages above
        raise HypothesisFailed("pipeline produced an improper colouring", result.violating_edge)
    return result


__all__ = [
    "Check",
    "Colouring",
    "LiftReport",
    "check_lift_conditions",
    "chromatic_oracle",
    "colour_graph",
    "lift_to_A",
    "three_colour_from_A",
    "validate_colouring",
]
