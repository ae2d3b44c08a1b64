from __future__ import annotations

import networkx as nx
import pytest

from oddcolour.colouring import chromatic_oracle
from oddcolour.errors import EvenBase, TooSmall, ZeroSize
from oddcolour.generators import (
    GeneratorSpec,
    gen_blow_up,
    gen_cycle,
    gen_mycielski,
    gen_random_Hk,
    generate,
)
from oddcolour.graph_core import SimpleGraph
from oddcolour.parity import check_membership, odd_girth

from conftest import from_nx, small_graphs


def to_nx(G: SimpleGraph) -> nx.Graph:
    N = nx.Graph()
    N.add_nodes_from(range(G.n))
    N.add_edges_from(G.edges())
    return N


def test_cycle():
    G = gen_cycle(5)
    assert G.n == 5 and G.m == 5 and odd_girth(G)[0] == 5
    with pytest.raises(TooSmall):
        gen_cycle(2)


def test_groetzsch_graph():
    G = gen_mycielski(5, 1)
    assert (G.n, G.m) == (11, 20)
    assert nx.is_isomorphic(to_nx(G), nx.mycielski_graph(4))
    assert chromatic_oracle(G) == 4


@pytest.mark.parametrize("base, levels", [(5, 1), (7, 2), (9, 3), (11, 2)])
def test_mycielski_odd_girth(base, levels):
    G = gen_mycielski(base, levels)
    assert G.n == base * (levels + 1) + 1
    # the apex closes odd cycles through all levels
    assert odd_girth(G)[0] == min(base, 2 * levels + 3)
    assert nx.shortest_path_length(to_nx(G), 0, G.n - 1) == levels + 1


def test_mycielski_chromatic_number_small():
    assert chromatic_oracle(gen_mycielski(7, 2), limit_n=22) == 4


def test_mycielski_errors():
    with pytest.raises(EvenBase):
        gen_mycielski(6, 1)
    with pytest.raises(TooSmall):
        gen_mycielski(5, 0)


def test_blow_up_examples():
    K2 = SimpleGraph.from_edges(2, [(0, 1)])
    G = gen_blow_up(K2, (2, 3))
    assert nx.is_isomorphic(to_nx(G), nx.complete_bipartite_graph(2, 3))
    assert G.edges() == [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
    G = gen_blow_up(gen_cycle(5), 3)
    assert (G.n, G.m, G.min_degree()) == (15, 45, 6)
    with pytest.raises(ZeroSize):
        gen_blow_up(K2, (1, 0))
    with pytest.raises(ValueError):
        gen_blow_up(K2, (1, 2, 3))


def test_blow_up_preserves_odd_girth():
    for G in small_graphs()[::7]:
        B = gen_blow_up(G, [1 + (v % 3) for v in range(G.n)])
        assert odd_girth(B)[0] == odd_girth(G)[0]


def test_random_hk_basics():
    H = gen_random_Hk(5, 1, 0.5, seed=1)
    assert H.n == 1 and H.m == 0
    T = gen_random_Hk(5, 12, 0.0, seed=2)
    assert T.m == 11 and all(w == 3 for _, _, w in T.edges())
    assert nx.is_tree(to_nx(T.skeleton))


@pytest.mark.parametrize("seed", range(10))
def test_random_hk_membership(seed):
    for loc in (None, 2):
        H = gen_random_Hk(10, 25, 0.3, seed, tree_locality=loc)
        rep = check_membership(H, 10, 25)
        assert rep.is_member, rep


def test_random_hk_is_maximal_under_rejection():
    # every pair left out at bias 1 must close a short odd cycle for every weight
    from oddcolour.weighted import WEIGHTS, WeightedGraph

    H = gen_random_Hk(6, 14, 1.0, seed=5)
    present = {(u, v) for u, v, _ in H.edges()}
    for u in range(H.n):
        for v in range(u + 1, H.n):
            if (u, v) in present:
                continue
            # the weight tried is random, so at least one weight must be blocked
            blocked = 0
            for w in WEIGHTS:
                H2 = WeightedGraph.from_edges(H.n, H.edges() + [(u, v, w)])
                blocked += not check_membership(H2, 6).is_member
            assert blocked >= 1


def test_random_hk_determinism_and_generator_spec():
    a = gen_random_Hk(8, 20, 0.2, seed=9, tree_locality=3)
    b = generate(GeneratorSpec("random_Hk", {"k": 8, "n": 20, "edge_bias": 0.2, "tree_locality": 3}, seed=9))
    assert a.edges() == b.edges() and a.tree_edges == b.tree_edges
    assert GeneratorSpec("blow_up", {"cycle": 5, "sizes": 2}).build().n == 10
    assert generate(GeneratorSpec("mycielski", {"base_cycle": 5, "levels": 1})).n == 11
    with pytest.raises(ValueError):
        GeneratorSpec("petersen")
    with pytest.raises(ValueError):
        gen_random_Hk(5, 5, 1.5)
