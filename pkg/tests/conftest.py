from __future__ import annotations

import itertools
import random
from functools import lru_cache
from pathlib import Path

import networkx as nx
import pytest

from oddcolour import SimpleGraph, WeightedGraph

DATA = Path(__file__).parent / "data"


def cycle(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def weighted_cycle(weights, tree=True) -> WeightedGraph:
    n = len(weights)
    edges = [(i, (i + 1) % n, w) for i, w in enumerate(weights)]
    tree_edges = [(i, i + 1) for i in range(n - 1)] if tree else None
    return WeightedGraph.from_edges(n, edges, tree_edges=tree_edges)


def from_nx(G: nx.Graph) -> SimpleGraph:
    G = nx.convert_node_labels_to_integers(G)
    return SimpleGraph.from_edges(G.number_of_nodes(), G.edges())


@lru_cache(maxsize=None)
def small_graphs() -> tuple[SimpleGraph, ...]:
    """Every graph on 1..8 vertices up to isomorphism (frozen fixture)."""
    out = []
    for line in (DATA / "graphs_le8.g6").read_bytes().split():
        out.append(from_nx(nx.from_graph6_bytes(line)))
    return tuple(out)


def random_weighted(n: int, p: float, rng: random.Random) -> WeightedGraph:
    edges = [(u, v, rng.choice((3, 4, 5))) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return WeightedGraph.from_edges(n, edges)


def simple_cycles(H) -> list[list[int]]:
    """All simple cycles of an undirected graph, each once (brute-force DFS)."""
    adj = H.skeleton.adjacency if isinstance(H, WeightedGraph) else H.adjacency
    out = []

    def dfs(start, v, path, on):
        for u in adj[v]:
            if u == start and len(path) >= 3 and path[1] < path[-1]:
                out.append(list(path))
            elif u > start and u not in on:
                on.add(u)
                path.append(u)
                dfs(start, u, path, on)
                path.pop()
                on.discard(u)

    for s in range(len(adj)):
        dfs(s, s, [s], {s})
    return out


@pytest.fixture
def rng():
    return random.Random(12345)


def cycle_chain(length: int, gap: int, count: int = 2) -> WeightedGraph:
    """``count`` weight-3 cycles of ``length`` vertices, consecutive ones
    joined at their first vertices by a weight-3 path of ``gap`` edges."""
    edges = []
    n = 0
    prev = None
    for _ in range(count):
        base = n
        edges += [(base + i, base + (i + 1) % length, 3) for i in range(length)]
        n += length
        if prev is not None:
            p = prev
            for _ in range(gap - 1):
                edges.append((p, n, 3))
                p = n
                n += 1
            edges.append((p, base, 3))
        prev = base
    return WeightedGraph.from_edges(n, edges)


def hk_corpus(k: int, count: int, seed0: int = 0):
    """Deterministic mixture of random H(k) members with n up to 2k + 5."""
    from oddcolour.generators import gen_random_Hk

    out = []
    for s in range(count):
        n = (2 * k - 3, 2 * k, 2 * k + 5, k + 3)[s % 4]
        bias = (0.05, 0.1, 0.2, 0.4)[(s // 4) % 4]
        loc = (1, 2, 3, None)[(s // 16) % 4]
        out.append((gen_random_Hk(k, n, bias, seed0 + s, tree_locality=loc), max(0, n - 2 * k)))
    return out


_CRITERIA: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    number = int(report.nodeid.split("test_criterion_")[1].split("_")[0])
    lines = [x for x in report.capstdout.splitlines() if x.startswith("criterion ")]
    # a test that errors before reporting still gets its line
    _CRITERIA[number] = lines[-1] if lines else f"criterion {number}: FAIL - {report.nodeid}"


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[number])
