"""Weighted bipartiteness, minimum odd-weight cycles and H(k) membership.

A weighted graph is weighted bipartite exactly when its vertices admit a
labelling ``c`` with ``c(u) + c(v) = w(uv) (mod 2)`` on every edge; the
labelling is found breadth-first and a violated edge closes an odd cycle.

Minimum odd cycles are found by a parity-doubled Dijkstra from root vertices.
After a root has been searched it is deleted: every odd cycle through it is
no lighter than the odd closed walk already found.  The search stops as soon
as the surviving vertices are weighted bipartite, which keeps near-bipartite
inputs (long cycles, blow-ups of cycles) close to linear time.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graph_core import SimpleGraph, _tree_cycle, as_vertex_set
from .weighted import WeightedGraph, edge_key

WAdj = Sequence[Sequence[tuple[int, int]]]


@dataclass(frozen=True)
class OddCycleWitness:
    """A simple cycle of odd total weight, listed in cyclic order."""

    vertices: tuple[int, ...]
    total_weight: int

    def __len__(self):
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [edge_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


@dataclass(frozen=True)
class MembershipReport:
    is_member: bool
    k: int
    s: int | None
    min_odd_cycle_weight: float
    has_weight3_spanning_tree: bool
    size_ok: bool
    witness: OddCycleWitness | None = None
    tree: frozenset[tuple[int, int]] | None = None


# -- generic cores over (neighbour, weight) adjacency -------------------------


def _unit_wadj(G: SimpleGraph) -> list[list[tuple[int, int]]]:
    return [[(u, 1) for u in row] for row in G.adjacency]


def _walk_weight(wmap, walk: Sequence[int]) -> int:
    return sum(wmap(a, b) for a, b in zip(walk, walk[1:]))


def _parity_labelling(wadj: WAdj, alive: set[int] | frozenset[int]):
    """Return ``(labels, None)`` or ``(None, odd_cycle_vertices)``."""
    label: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    for s in sorted(alive):
        if s in label:
            continue
        label[s] = 0
        parent[s] = None
        depth[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            lv = label[v]
            for u, w in wadj[v]:
                if u not in alive:
                    continue
                want = lv ^ (w & 1)
                if u not in label:
                    label[u] = want
                    parent[u] = v
                    depth[u] = depth[v] + 1
                    queue.append(u)
                elif label[u] != want:
                    return None, _tree_cycle(parent, depth, v, u)
    return label, None


def _prune_acyclic(wadj: WAdj, alive: set[int], seeds: Iterable[int] | None = None) -> None:
    """Repeatedly delete vertices of degree <= 1 inside ``alive`` (in place)."""
    deg = {}
    stack = []
    candidates = alive if seeds is None else [v for v in seeds if v in alive]
    for v in candidates:
        d = sum(1 for u, _ in wadj[v] if u in alive)
        deg[v] = d
        if d <= 1:
            stack.append(v)
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        if deg.get(v, 2) > 1:
            continue
        alive.discard(v)
        for u, _ in wadj[v]:
            if u in alive:
                if u not in deg:
                    deg[u] = sum(1 for x, _ in wadj[u] if x in alive) + 1
                deg[u] -= 1
                if deg[u] <= 1:
                    stack.append(u)


def _odd_closed_walk(wadj: WAdj, alive, root: int, bound: float) -> list[int] | None:
    """Lightest odd closed walk through ``root`` of weight ``< bound``."""
    start = (root, 0)
    goal = (root, 1)
    dist = {start: 0}
    pred = {start: None}
    done = set()
    heap = [(0, root, 0)]
    while heap:
        d, v, p = heapq.heappop(heap)
        state = (v, p)
        if state in done:
            continue
        done.add(state)
        if state == goal:
            walk = []
            cur = goal
            while cur is not None:
                walk.append(cur[0])
                cur = pred[cur]
            walk.reverse()
            return walk
        for u, w in wadj[v]:
            if u not in alive:
                continue
            nd = d + w
            if nd >= bound:
                continue
            ns = (u, p ^ (w & 1))
            if ns not in done and nd < dist.get(ns, math.inf):
                dist[ns] = nd
                pred[ns] = state
                heapq.heappush(heap, (nd, u, ns[1]))
    return None


def odd_cycle_in_closed_walk(walk: Sequence[int], wmap) -> list[int]:
    """Extract a simple odd-weight cycle from an odd closed walk.

    ``walk`` starts and ends at the same vertex.  Even closed sub-walks are
    spliced out; an odd one replaces the current walk.  The result weighs no
    more than the walk.
    """
    cur = list(walk)
    while True:
        stack: list[int] = []
        pos: dict[int, int] = {}
        restarted = False
        for idx, v in enumerate(cur):
            if v in pos:
                j = pos[v]
                loop = stack[j:] + [v]
                if _walk_weight(wmap, loop) % 2 == 1:
                    if j == 0 and idx == len(cur) - 1:
                        return stack
                    cur = loop
                    restarted = True
                    break
                for x in stack[j + 1 :]:
                    del pos[x]
                del stack[j + 1 :]
            else:
                pos[v] = len(stack)
                stack.append(v)
        if not restarted:
            raise ValueError("walk has even weight or is not closed")


def _min_odd_core(wadj: WAdj, members: Iterable[int], wmap):
    alive = set(members)
    _prune_acyclic(wadj, alive)
    best = math.inf
    best_cycle = None
    while alive:
        _, cyc = _parity_labelling(wadj, alive)
        if cyc is None:
            break
        cw = _walk_weight(wmap, cyc + [cyc[0]])
        if cw < best:
            best, best_cycle = cw, cyc
        root = min(cyc)
        walk = _odd_closed_walk(wadj, alive, root, best)
        if walk is not None:
            found = odd_cycle_in_closed_walk(walk, wmap)
            fw = _walk_weight(wmap, found + [found[0]])
            if fw < best:
                best, best_cycle = fw, found
        alive.discard(root)
        _prune_acyclic(wadj, alive, seeds=[u for u, _ in wadj[root]])
    return best, best_cycle


# -- weighted graphs ----------------------------------------------------------


def _members(H: WeightedGraph, S: Iterable[int] | None) -> frozenset[int]:
    return frozenset(range(H.n)) if S is None else as_vertex_set(H.skeleton, S)


def _witness(H: WeightedGraph, cyc: list[int]) -> OddCycleWitness:
    return OddCycleWitness(tuple(cyc), H.cycle_weight(cyc))


def parity_labels(H: WeightedGraph, S: Iterable[int] | None = None) -> dict[int, int] | None:
    """Parity labelling of ``H[S]``, or ``None`` if it has an odd cycle."""
    labels, _ = _parity_labelling(H.wadj, _members(H, S))
    return labels


def odd_weight_cycle(H: WeightedGraph, S: Iterable[int] | None = None) -> OddCycleWitness | None:
    """Some odd-weight cycle of ``H[S]``, or ``None`` when weighted bipartite."""
    _, cyc = _parity_labelling(H.wadj, _members(H, S))
    return None if cyc is None else _witness(H, cyc)


def is_weighted_bipartite(H: WeightedGraph, S: Iterable[int] | None = None) -> bool:
    return odd_weight_cycle(H, S) is None


def min_odd_cycle_weight(
    H: WeightedGraph, S: Iterable[int] | None = None
) -> tuple[float, OddCycleWitness | None]:
    """Minimum weight of an odd-weight cycle in ``H[S]`` with a witness.

    Returns ``(math.inf, None)`` when ``H[S]`` is weighted bipartite.
    """
    best, cyc = _min_odd_core(H.wadj, _members(H, S), H.w)
    if cyc is None:
        return math.inf, None
    return best, _witness(H, cyc)


def weight3_spanning_tree(H: WeightedGraph) -> frozenset[tuple[int, int]] | None:
    """BFS tree of the weight-3 edges from vertex 0, if it spans ``H``."""
    n = H.n
    if n == 0:
        return frozenset()
    seen = {0}
    tree = []
    queue = deque([0])
    wadj = H.wadj
    while queue:
        v = queue.popleft()
        for u, w in wadj[v]:
            if w == 3 and u not in seen:
                seen.add(u)
                tree.append(edge_key(u, v))
                queue.append(u)
    return frozenset(tree) if len(seen) == n else None


def check_membership(H: WeightedGraph, k: int, s: int | None = None) -> MembershipReport:
    """Membership of ``H`` in the family H(k), or H(k, s) when ``s`` is given."""
    if k < 1:
        raise ValueError("k must be at least 1")
    mow, witness = min_odd_cycle_weight(H)
    girth_ok = mow >= 2 * k + 1
    tree = H.tree_edges if H.tree_edges is not None else weight3_spanning_tree(H)
    size_ok = s is None or H.n <= s
    return MembershipReport(
        is_member=girth_ok and tree is not None and size_ok,
        k=k,
        s=s,
        min_odd_cycle_weight=mow,
        has_weight3_spanning_tree=tree is not None,
        size_ok=size_ok,
        witness=witness,
        tree=tree,
    )


# -- unweighted graphs ----------------------------------------------------------


def _twin_representatives(G: SimpleGraph) -> list[int]:
    """One vertex per class of vertices with identical open neighbourhoods.

    An odd closed walk keeps its length when twins are exchanged, so the
    representatives span an induced subgraph with the same odd girth.
    """
    first = {}
    for v, row in enumerate(G.adjacency):
        first.setdefault(row, v)
    return sorted(first.values())


def is_bipartite(G: SimpleGraph, S: Iterable[int] | None = None) -> bool:
    members = frozenset(range(G.n)) if S is None else as_vertex_set(G, S)
    labels, _ = _parity_labelling(_unit_wadj(G), members)
    return labels is not None


def odd_girth(G: SimpleGraph) -> tuple[float, OddCycleWitness | None]:
    """Length of a shortest odd cycle of ``G`` and a witness cycle."""
    reps = _twin_representatives(G)
    if len(reps) < G.n:
        R, labels = G.induced(reps)
    else:
        R, labels = G, list(range(G.n))
    best, cyc = _min_odd_core(_unit_wadj(R), range(R.n), lambda a, b: 1)
    if cyc is None:
        return math.inf, None
    return best, OddCycleWitness(tuple(labels[v] for v in cyc), len(cyc))


class ParityUnionFind:
    """Grow a vertex set while tracking whether it stays weighted bipartite.

    Vertices are only ever added.  Once a conflict is found the structure is
    marked broken and stays broken.
    """

    def __init__(self, H: WeightedGraph):
        self._wadj = H.wadj
        self._parent: dict[int, int] = {}
        self._par: dict[int, int] = {}  # parity of the path to the parent
        self.broken = False

    def __contains__(self, v: int) -> bool:
        return v in self._parent

    def __len__(self) -> int:
        return len(self._parent)

    def _find(self, v: int) -> tuple[int, int]:
        path = []
        p = 0
        while self._parent[v] != v:
            path.append(v)
            p ^= self._par[v]
            v = self._parent[v]
        root = v
        # path compression; parities re-expressed relative to the root
        acc = p
        for x in path:
            nxt_par = acc ^ self._par[x]
            self._parent[x] = root
            self._par[x] = acc
            acc = nxt_par
        return root, p

    def add(self, v: int) -> bool:
        """Add ``v`` with its edges to current members; False once broken."""
        if v in self._parent:
            return not self.broken
        self._parent[v] = v
        self._par[v] = 0
        for u, w in self._wadj[v]:
            if u == v or u not in self._parent:
                continue
            ru, pu = self._find(u)
            rv, pv = self._find(v)
            want = w & 1
            if ru == rv:
                if pu ^ pv != want:
                    self.broken = True
            else:
                self._parent[rv] = ru
                self._par[rv] = pu ^ pv ^ want
        return not self.broken

    def add_all(self, vs: Iterable[int]) -> bool:
        for v in vs:
            self.add(v)
        return not self.broken
