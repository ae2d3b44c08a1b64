from __future__ import annotations

import math
import random

import pytest

from oddcolour.errors import Disconnected, EmptySet, InvalidGraph, InvalidVertex
from oddcolour.graph_core import bfs_distances, closed_neighbourhood
from oddcolour.weighted import (
    WeightedGraph,
    dijkstra,
    lightest_path,
    subdivide,
    weighted_ball,
    weighted_distance,
)

from conftest import random_weighted, weighted_cycle

PATH = WeightedGraph.from_edges(3, [(0, 1, 3), (1, 2, 4)])
TRI335 = WeightedGraph.from_edges(3, [(0, 1, 3), (1, 2, 3), (0, 2, 5)])


def test_subdivide_examples():
    S, m = subdivide(WeightedGraph.from_edges(2, [(0, 1, 3)]))
    assert (S.n, S.m) == (4, 3)
    assert m.edge_image[(0, 1)][0] == 0 and m.edge_image[(0, 1)][-1] == 1
    S, _ = subdivide(WeightedGraph.from_edges(3, [(0, 1, 3), (1, 2, 4), (0, 2, 5)]))
    assert (S.n, S.m) == (12, 12) and all(S.degree(v) == 2 for v in range(12))
    S, m = subdivide(weighted_cycle([3] * 5))
    assert (S.n, S.m) == (15, 15)
    assert m.origin[:5] == tuple(("vertex", v) for v in range(5))


def test_weighted_distance_examples():
    assert weighted_distance(PATH, {0}, {2}) == 7
    assert weighted_distance(TRI335, {0}, {2}) == 5
    assert weighted_distance(PATH, {1}, {1}) == 0
    with pytest.raises(EmptySet):
        weighted_distance(PATH, set(), {1})


def test_weighted_ball_examples():
    C = weighted_cycle([3] * 5)
    assert weighted_ball(C, 2, 0) == {2}
    assert weighted_ball(C, 0, 3) == {4, 0, 1}
    assert weighted_ball(C, 0, 6) == set(range(5))
    with pytest.raises(InvalidVertex):
        weighted_ball(C, 9, 3)


def test_lightest_path_examples():
    assert lightest_path(PATH, {1}, {1}).vertices == (1,)
    p = lightest_path(PATH, {0}, {2})
    assert p.vertices == (0, 1, 2) and p.total_weight == 7
    p = lightest_path(TRI335, {0}, {2})
    assert p.vertices == (0, 2) and p.total_weight == 5
    two = WeightedGraph.from_edges(4, [(0, 1, 3), (2, 3, 3)])
    with pytest.raises(Disconnected):
        lightest_path(two, {0}, {3})


def test_distances_match_subdivision_bfs():
    rng = random.Random(3)
    for _ in range(150):
        H = random_weighted(rng.randint(2, 7), 0.5, rng)
        S, _ = subdivide(H)
        for x in range(H.n):
            bfs = bfs_distances(S, [x])
            dj = dijkstra(H, [x])
            for y in range(H.n):
                assert dj.get(y, math.inf) == bfs.get(y, math.inf)


def test_ball_and_path_properties():
    rng = random.Random(4)
    for _ in range(150):
        H = random_weighted(rng.randint(2, 9), 0.4, rng)
        v = rng.randrange(H.n)
        for i in range(0, 16):
            ball = weighted_ball(H, v, i)
            assert ball <= closed_neighbourhood(H.skeleton, {v}, i // 3)
            assert ball <= weighted_ball(H, v, i + 1)
        A = set(rng.sample(range(H.n), rng.randint(1, 2)))
        B = set(rng.sample(range(H.n), rng.randint(1, 2)))
        d = weighted_distance(H, A, B)
        if d == math.inf:
            continue
        P = lightest_path(H, A, B)
        verts = P.vertices
        assert P.total_weight == d == H.path_weight(verts)
        assert len(set(verts)) == len(verts)
        assert verts[0] in A and verts[-1] in B
        # sub-path optimality towards the far endpoint
        for j in range(len(verts)):
            assert H.path_weight(verts[j:]) == weighted_distance(H, {verts[j]}, {verts[-1]})


def test_lightest_path_deterministic():
    rng = random.Random(5)
    H = random_weighted(9, 0.5, rng)
    assert lightest_path(H, {0}, {8}) == lightest_path(H, {0}, {8})


def test_weighted_graph_validation():
    with pytest.raises(InvalidGraph):
        WeightedGraph.from_edges(2, [(0, 1, 6)])
    with pytest.raises(InvalidGraph):
        WeightedGraph.from_edges(3, [(0, 1, 3), (1, 2, 4)], tree_edges=[(0, 1), (1, 2)])
    with pytest.raises(InvalidGraph):
        WeightedGraph.from_edges(3, [(0, 1, 3), (1, 2, 3)], tree_edges=[(0, 1)])
