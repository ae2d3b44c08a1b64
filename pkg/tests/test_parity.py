from __future__ import annotations

import math
import random

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from oddcolour.parity import (
    ParityUnionFind,
    check_membership,
    is_bipartite,
    is_weighted_bipartite,
    min_odd_cycle_weight,
    odd_girth,
    odd_weight_cycle,
)
from oddcolour.weighted import WeightedGraph, subdivide

from conftest import cycle, from_nx, random_weighted, simple_cycles, weighted_cycle


def brute_min_odd(H, S=None):
    best = math.inf
    for cyc in simple_cycles(H):
        if S is not None and not set(cyc) <= S:
            continue
        w = H.cycle_weight(cyc)
        if w % 2 == 1:
            best = min(best, w)
    return best


def assert_witness(H, wit):
    verts = wit.vertices
    assert len(set(verts)) == len(verts) >= 3
    assert all(H.skeleton.has_edge(a, b) for a, b in zip(verts, verts[1:] + verts[:1]))
    assert wit.total_weight == H.cycle_weight(verts)
    assert wit.total_weight % 2 == 1


def test_bipartite_examples():
    t = WeightedGraph.from_edges(3, [(0, 1, 3), (1, 2, 3), (0, 2, 3)])
    assert not is_weighted_bipartite(t)
    wit = odd_weight_cycle(t)
    assert sorted(wit.vertices) == [0, 1, 2] and wit.total_weight == 9
    assert is_weighted_bipartite(WeightedGraph.from_edges(3, [(0, 1, 3), (1, 2, 3), (0, 2, 4)]))
    assert is_weighted_bipartite(weighted_cycle([3, 4, 3, 4], tree=False))


def test_min_odd_cycle_examples():
    assert min_odd_cycle_weight(weighted_cycle([3] * 5))[0] == 15
    assert min_odd_cycle_weight(WeightedGraph.from_edges(3, [(0, 1, 3), (1, 2, 3), (0, 2, 4)]))[0] == math.inf
    bowtie = WeightedGraph.from_edges(
        5, [(0, 1, 3), (1, 2, 3), (0, 2, 5), (0, 3, 3), (3, 4, 3), (0, 4, 3)]
    )
    w, wit = min_odd_cycle_weight(bowtie)
    assert w == 9 and sorted(wit.vertices) == [0, 3, 4]


def test_membership_examples():
    single = WeightedGraph.from_edges(1, [])
    assert check_membership(single, 10).is_member
    tri = WeightedGraph.from_edges(3, [(0, 1, 3), (1, 2, 4), (0, 2, 5)])
    rep = check_membership(tri, 1)
    assert not rep.is_member and not rep.has_weight3_spanning_tree
    c15 = weighted_cycle([3] * 15, tree=False)
    rep = check_membership(c15, 22)
    assert rep.is_member and rep.min_odd_cycle_weight == 45 and len(rep.tree) == 14
    assert not check_membership(c15, 23).is_member
    assert not check_membership(c15, 22, s=14).is_member
    assert check_membership(c15, 22, s=15).is_member



def test_membership_consistent_with_given_tree():
    c15 = weighted_cycle([3] * 15, tree=True)
    with_tree = check_membership(c15, 22)
    found = check_membership(c15.with_tree(None), 22)
    assert with_tree.is_member == found.is_member
    assert with_tree.min_odd_cycle_weight == found.min_odd_cycle_weight
    assert with_tree.tree == c15.tree_edges


def test_agrees_with_enumeration_and_subdivision():
    rng = random.Random(7)
    for _ in range(300):
        H = random_weighted(rng.randint(3, 8), rng.choice((0.3, 0.5, 0.8)), rng)
        expected = brute_min_odd(H)
        w, wit = min_odd_cycle_weight(H)
        assert w == expected
        S, _ = subdivide(H)
        g = nx.Graph(S.edges())
        g.add_nodes_from(range(S.n))
        assert is_weighted_bipartite(H) == nx.is_bipartite(g) == (expected == math.inf)
        if wit is not None:
            assert_witness(H, wit)


def test_restricted_sets_and_monotonicity():
    rng = random.Random(8)
    for _ in range(200):
        H = random_weighted(rng.randint(3, 8), 0.6, rng)
        S = frozenset(v for v in range(H.n) if rng.random() < 0.7)
        T = frozenset(v for v in S if rng.random() < 0.7)
        wS, witS = min_odd_cycle_weight(H, S)
        assert wS == brute_min_odd(H, S)
        assert min_odd_cycle_weight(H, T)[0] >= wS
        if witS is not None:
            assert set(witS.vertices) <= S


def test_odd_girth_matches_enumeration():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randint(3, 10)
        G = from_nx(nx.gnp_random_graph(n, rng.choice((0.2, 0.35, 0.6)), seed=rng.randrange(10**6)))
        lengths = [len(c) for c in simple_cycles(G) if len(c) % 2]
        g, wit = odd_girth(G)
        assert g == (min(lengths) if lengths else math.inf)
        assert is_bipartite(G) == (g == math.inf)
        if wit is not None:
            verts = wit.vertices
            assert len(verts) == g == len(set(verts))
            assert all(G.has_edge(a, b) for a, b in zip(verts, verts[1:] + verts[:1]))


def test_odd_girth_of_blow_up_uses_twins():
    from oddcolour.generators import gen_blow_up

    G = gen_blow_up(cycle(9), 3)
    assert odd_girth(G)[0] == 9
    assert odd_girth(cycle(10))[0] == math.inf


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 9), st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8), st.sampled_from((3, 4, 5)))))
def test_union_find_matches_direct_check(n, raw):
    seen = {}
    for u, v, w in raw:
        if u < n and v < n and u != v:
            seen.setdefault((min(u, v), max(u, v)), w)
    H = WeightedGraph.from_edges(n, [(u, v, w) for (u, v), w in seen.items()])
    uf = ParityUnionFind(H)
    added = set()
    for v in range(n):
        ok = uf.add(v)
        added.add(v)
        assert ok == is_weighted_bipartite(H, added)
        if not ok:
            break
