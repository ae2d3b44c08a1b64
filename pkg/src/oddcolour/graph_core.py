"""Undirected simple graphs and the unweighted neighbourhood primitives.

Vertex sets are plain ``frozenset`` objects of vertex indices; every
operation returns a fresh set and never mutates its inputs.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Sequence

from .errors import EmptySet, InvalidGraph, InvalidVertex

VertexSet = frozenset


class SimpleGraph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Adjacency lists are stored as sorted tuples, so two graphs with the same
    edge set compare equal regardless of how they were built.
    """

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, vertex_count: int, adjacency: Sequence[Iterable[int]]):
        if vertex_count < 0 or len(adjacency) != vertex_count:
            raise InvalidGraph("adjacency must have one entry per vertex")
        adj = []
        for v, nbrs in enumerate(adjacency):
            row = tuple(sorted(nbrs))
            for u in row:
                if not 0 <= u < vertex_count:
                    raise InvalidVertex(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise InvalidGraph(f"self-loop at {v}")
            if len(set(row)) != len(row):
                raise InvalidGraph(f"duplicate edge at {v}")
            adj.append(row)
        m2 = 0
        for v, row in enumerate(adj):
            m2 += len(row)
            for u in row:
                # asymmetric adjacency is rejected
                if not _sorted_contains(adj[u], v):
                    raise InvalidGraph(f"edge {v}-{u} listed only once")
        self._n = vertex_count
        self._adj = tuple(adj)
        self._m = m2 // 2

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        seen = set()
        for u, v in edges:
            if u == v:
                raise InvalidGraph(f"self-loop at {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidVertex(f"edge {u}-{v} out of range")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidGraph(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        return cls(vertex_count, adj)

    @property
    def n(self) -> int:
        return self._n

    vertex_count = n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def min_degree(self) -> int:
        return min((len(r) for r in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _sorted_contains(self._adj[u], v)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u, row in enumerate(self._adj) for v in row if u < v]

    def vertices(self) -> range:
        return range(self._n)

    def induced(self, members: Iterable[int]) -> tuple[SimpleGraph, list[int]]:
        """Return ``(G[S], labels)`` where ``labels[i]`` is the host index of i."""
        labels = sorted(set(members))
        index = {v: i for i, v in enumerate(labels)}
        adj = [[index[u] for u in self._adj[v] if u in index] for v in labels]
        return SimpleGraph(len(labels), adj), labels

    def __eq__(self, other):
        return isinstance(other, SimpleGraph) and self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"SimpleGraph(n={self._n}, m={self._m})"


def _sorted_contains(row: tuple[int, ...], x: int) -> bool:
    lo, hi = 0, len(row)
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo < len(row) and row[lo] == x


def as_vertex_set(G: SimpleGraph, B: Iterable[int]) -> frozenset[int]:
    """Validate ``B`` against ``G`` and return it as a frozenset."""
    S = frozenset(B)
    n = G.n
    for v in S:
        if not (isinstance(v, int) and 0 <= v < n):
            raise InvalidVertex(f"vertex {v!r} not in graph with {n} vertices")
    return S


def bfs_distances(
    G: SimpleGraph,
    sources: Iterable[int],
    limit: float = math.inf,
    allowed: frozenset[int] | set[int] | None = None,
) -> dict[int, int]:
    """Multi-source BFS; returns distances ``<= limit`` of reached vertices.

    When ``allowed`` is given the search stays inside that vertex set.
    """
    adj = G.adjacency
    dist = {}
    queue = deque()
    for s in sources:
        if s not in dist and (allowed is None or s in allowed):
            dist[s] = 0
            queue.append(s)
    while queue:
        v = queue.popleft()
        d = dist[v]
        if d >= limit:
            continue
        for u in adj[v]:
            if u not in dist and (allowed is None or u in allowed):
                dist[u] = d + 1
                queue.append(u)
    return dist


def closed_neighbourhood(G: SimpleGraph, B: Iterable[int], i: int) -> frozenset[int]:
    """Vertices at distance at most ``i`` from ``B``."""
    S = as_vertex_set(G, B)
    if i < 0:
        raise ValueError("radius must be non-negative")
    if i == 0:
        return S
    return frozenset(bfs_distances(G, S, limit=i))


def interior(G: SimpleGraph, B: Iterable[int]) -> frozenset[int]:
    S = as_vertex_set(G, B)
    adj = G.adjacency
    return frozenset(v for v in S if all(u in S for u in adj[v]))


def set_distance(G: SimpleGraph, A: Iterable[int], B: Iterable[int]) -> float:
    """Minimum unweighted distance between the sets; ``math.inf`` if none."""
    SA = as_vertex_set(G, A)
    SB = as_vertex_set(G, B)
    if not SA or not SB:
        raise EmptySet("set_distance needs two nonempty sets")
    if SA & SB:
        return 0
    adj = G.adjacency
    seen = set(SA)
    frontier = list(SA)
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for u in adj[v]:
                if u not in seen:
                    if u in SB:
                        return d
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return math.inf


def is_connected_induced(G: SimpleGraph, B: Iterable[int]) -> bool:
    """True iff ``G[B]`` is connected; empty sets and singletons count."""
    S = as_vertex_set(G, B)
    if len(S) <= 1:
        return True
    start = min(S)
    return len(bfs_distances(G, [start], allowed=S)) == len(S)


def connected_components(G: SimpleGraph, members: Iterable[int] | None = None) -> list[list[int]]:
    """Components of ``G[members]`` as sorted vertex lists, ordered by minimum."""
    S = set(range(G.n)) if members is None else set(as_vertex_set(G, members))
    adj = G.adjacency
    comps = []
    for s in sorted(S):
        if s not in S:
            continue
        S.discard(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u in S:
                    S.discard(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def bipartition(
    G: SimpleGraph, members: Iterable[int] | None = None
) -> tuple[dict[int, int] | None, list[int] | None, dict[int, int | None]]:
    """Two-colour ``G[members]`` breadth-first, lowest index first.

    Returns ``(side, odd_cycle, parent)``.  ``side`` maps vertices to 0/1 and
    is ``None`` when an odd cycle exists, in which case ``odd_cycle`` lists its
    vertices in cyclic order.  ``parent`` is the BFS forest.
    """
    S = set(range(G.n)) if members is None else set(as_vertex_set(G, members))
    adj = G.adjacency
    side: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    for s in sorted(S):
        if s in side:
            continue
        side[s] = 0
        parent[s] = None
        depth[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in S:
                    continue
                if u not in side:
                    side[u] = 1 - side[v]
                    parent[u] = v
                    depth[u] = depth[v] + 1
                    queue.append(u)
                elif side[u] == side[v]:
                    return None, _tree_cycle(parent, depth, v, u), parent
    return side, None, parent


def _tree_cycle(parent, depth, a, b) -> list[int]:
    """Cycle formed by the tree paths from ``a`` and ``b`` plus the edge ``ab``."""
    left, right = [a], [b]
    x, y = a, b
    while depth[x] > depth[y]:
        x = parent[x]
        left.append(x)
    while depth[y] > depth[x]:
        y = parent[y]
        right.append(y)
    while x != y:
        x = parent[x]
        y = parent[y]
        left.append(x)
        right.append(y)
    # left ends at the common ancestor; right does too
    return left + right[-2::-1]


def tree_path(parent: dict[int, int | None], a: int, b: int) -> list[int]:
    """Path between two vertices of the same tree of a parent forest."""
    anc_a = [a]
    while parent[anc_a[-1]] is not None:
        anc_a.append(parent[anc_a[-1]])
    pos = {v: i for i, v in enumerate(anc_a)}
    path_b = [b]
    while path_b[-1] not in pos:
        path_b.append(parent[path_b[-1]])
    meet = pos[path_b[-1]]
    return anc_a[: meet + 1] + path_b[-2::-1]
