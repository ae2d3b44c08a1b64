"""{3,4,5}-edge-weighted graphs, weighted distances and lightest paths."""

from __future__ import annotations

import heapq
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import Disconnected, EmptySet, InvalidGraph, InvalidVertex
from .graph_core import SimpleGraph, as_vertex_set, connected_components

WEIGHTS = (3, 4, 5)


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class WeightedGraph:
    """A simple graph with a weight in {3,4,5} on every edge.

    ``tree_edges`` optionally records a spanning tree made of weight-3 edges;
    it is validated on construction.
    """

    __slots__ = ("skeleton", "weight", "tree_edges", "_wadj")

    def __init__(
        self,
        skeleton: SimpleGraph,
        weight: Mapping[tuple[int, int], int],
        tree_edges: Iterable[tuple[int, int]] | None = None,
    ):
        w = {}
        for (u, v), x in weight.items():
            k = edge_key(u, v)
            if not skeleton.has_edge(*k):
                raise InvalidGraph(f"weight given for non-edge {k}")
            if x not in WEIGHTS:
                raise InvalidGraph(f"edge {k} has weight {x}, expected 3, 4 or 5")
            w[k] = x
        if len(w) != skeleton.m:
            raise InvalidGraph("every edge needs exactly one weight")
        self.skeleton = skeleton
        self.weight = w
        self._wadj = tuple(
            tuple((u, w[edge_key(v, u)]) for u in row) for v, row in enumerate(skeleton.adjacency)
        )
        if tree_edges is not None:
            tree = frozenset(edge_key(u, v) for u, v in tree_edges)
            _check_tree(skeleton, w, tree)
            self.tree_edges = tree
        else:
            self.tree_edges = None

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int, int]],
        tree_edges: Iterable[tuple[int, int]] | None = None,
    ) -> WeightedGraph:
        edges = list(edges)
        skel = SimpleGraph.from_edges(vertex_count, [(u, v) for u, v, _ in edges])
        return cls(skel, {(u, v): w for u, v, w in edges}, tree_edges)

    @property
    def n(self) -> int:
        return self.skeleton.n

    @property
    def m(self) -> int:
        return self.skeleton.m

    @property
    def wadj(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuples of ``(neighbour, weight)``."""
        return self._wadj

    def w(self, u: int, v: int) -> int:
        return self.weight[edge_key(u, v)]

    def edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, self.weight[(u, v)]) for u, v in self.skeleton.edges()]

    def with_tree(self, tree_edges: Iterable[tuple[int, int]] | None) -> WeightedGraph:
        return WeightedGraph(self.skeleton, self.weight, tree_edges)

    def path_weight(self, vertices: list[int] | tuple[int, ...]) -> int:
        return sum(self.w(a, b) for a, b in zip(vertices, vertices[1:]))

    def cycle_weight(self, vertices: list[int] | tuple[int, ...]) -> int:
        return self.path_weight(list(vertices) + [vertices[0]]) if len(vertices) > 1 else 0

    def __eq__(self, other):
        return (
            isinstance(other, WeightedGraph)
            and self.skeleton == other.skeleton
            and self.weight == other.weight
            and self.tree_edges == other.tree_edges
        )

    def __hash__(self):
        return hash((self.skeleton, tuple(sorted(self.weight.items()))))

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, m={self.skeleton.m})"


def _check_tree(skeleton: SimpleGraph, w, tree) -> None:
    n = skeleton.n
    for e in tree:
        if e not in w:
            raise InvalidGraph(f"tree edge {e} is not an edge")
        if w[e] != 3:
            raise InvalidGraph(f"tree edge {e} has weight {w[e]}")
    if len(tree) != max(n - 1, 0):
        raise InvalidGraph("tree must have n-1 edges")
    t = SimpleGraph.from_edges(n, tree)
    if n and len(connected_components(t)) != 1:
        raise InvalidGraph("tree edges do not span the graph")


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    total_weight: int

    def __len__(self):
        return len(self.vertices)

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


@dataclass(frozen=True)
class SubdivisionMap:
    """Correspondence between a weighted graph and its subdivision.

    Original vertices keep their indices.  ``edge_image[(u, v)]`` lists the
    subdivision path from ``u`` to ``v`` (inclusive), and ``origin[x]`` is
    ``("vertex", v)`` or ``("edge", (u, v), position)`` for every new vertex.
    """

    vertex_count: int
    edge_image: dict[tuple[int, int], tuple[int, ...]]
    origin: tuple[tuple, ...]


def subdivide(H: WeightedGraph) -> tuple[SimpleGraph, SubdivisionMap]:
    """Replace each weight-s edge by a path of s edges."""
    n = H.n
    origin: list[tuple] = [("vertex", v) for v in range(n)]
    edges = []
    image = {}
    nxt = n
    for u, v, w in H.edges():
        path = [u]
        for pos in range(1, w):
            origin.append(("edge", (u, v), pos))
            path.append(nxt)
            nxt += 1
        path.append(v)
        edges.extend(zip(path, path[1:]))
        image[(u, v)] = tuple(path)
    return SimpleGraph.from_edges(nxt, edges), SubdivisionMap(n, image, tuple(origin))


def dijkstra(
    H: WeightedGraph,
    sources: Iterable[int],
    limit: float = math.inf,
    allowed: frozenset[int] | set[int] | None = None,
    stop_at: frozenset[int] | set[int] | None = None,
) -> dict[int, int]:
    """Finalised weighted distances from ``sources``, each ``<= limit``.

    If ``stop_at`` is given the search ends once the first member of it is
    settled; every vertex strictly closer than that member is settled too.
    """
    wadj = H.wadj
    dist: dict[int, int] = {}
    heap = []
    for s in sources:
        if allowed is None or s in allowed:
            heap.append((0, s))
    heapq.heapify(heap)
    best: dict[int, int] = {s: 0 for _, s in heap}
    while heap:
        d, v = heapq.heappop(heap)
        if v in dist:
            continue
        dist[v] = d
        if stop_at is not None and v in stop_at:
            break
        for u, w in wadj[v]:
            nd = d + w
            if nd > limit or u in dist:
                continue
            if allowed is not None and u not in allowed:
                continue
            if nd < best.get(u, math.inf):
                best[u] = nd
                heapq.heappush(heap, (nd, u))
    return dist


def _nonempty(H: WeightedGraph, S: Iterable[int]) -> frozenset[int]:
    S = as_vertex_set(H.skeleton, S)
    if not S:
        raise EmptySet("vertex set must be nonempty")
    return S


def weighted_distance(H: WeightedGraph, A: Iterable[int], B: Iterable[int]) -> float:
    SA, SB = _nonempty(H, A), _nonempty(H, B)
    if SA & SB:
        return 0
    dist = dijkstra(H, SA, stop_at=SB)
    hit = [dist[b] for b in SB if b in dist]
    return min(hit) if hit else math.inf


def weighted_ball(H: WeightedGraph, v: int, i: int) -> frozenset[int]:
    """Vertices at weighted distance at most ``i`` from ``v``."""
    if not (isinstance(v, int) and 0 <= v < H.n):
        raise InvalidVertex(f"vertex {v!r} not in graph")
    if i < 3:
        return frozenset([v])
    return frozenset(dijkstra(H, [v], limit=i))


def lightest_path(
    H: WeightedGraph,
    A: Iterable[int],
    B: Iterable[int],
    allowed: frozenset[int] | set[int] | None = None,
) -> PathWitness:
    """A minimum-weight path from a vertex of ``A`` to a vertex of ``B``.

    Ties: the ``B`` endpoint of smallest index among the nearest, and at every
    step back towards ``A`` the smallest-index tight predecessor.  Only the
    first vertex lies in ``A`` and only the last lies in ``B``.
    """
    SA, SB = _nonempty(H, A), _nonempty(H, B)
    common = SA & SB
    if common:
        x = min(common)
        return PathWitness((x,), 0)
    dist = dijkstra(H, SA, allowed=allowed, stop_at=SB)
    reached = [b for b in SB if b in dist]
    if not reached:
        raise Disconnected("no path between the two sets")
    target_d = min(dist[b] for b in reached)
    # the stop rule settles one nearest B vertex; settle the whole tie level
    dist = dijkstra(H, SA, limit=target_d, allowed=allowed)
    b = min(x for x in SB if dist.get(x) == target_d)
    wadj = H.wadj
    path = [b]
    v = b
    while dist[v] > 0:
        d = dist[v]
        v = min(u for u, w in wadj[v] if u in dist and dist[u] + w == d)
        path.append(v)
    path.reverse()
    return PathWitness(tuple(path), target_d)
