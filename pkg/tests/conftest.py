import random

import pytest
from hypothesis import strategies as st

from cutscan.graph import Graph, complete_graph, cycle_graph, interior_vertices, path_graph


def bowtie() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def clover() -> Graph:
    return Graph.from_edges(7, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4),
                                (2, 5), (2, 6), (5, 6)])


def random_connected(rng: random.Random, n: int, extra_p: float | None = None) -> Graph:
    """Random spanning tree plus independent extra edges, then a random relabelling."""
    p = rng.random() if extra_p is None else extra_p
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, ((perm[u], perm[v]) for u, v in edges))


def random_with_articulation(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_connected(rng, n, rng.uniform(0.1, 0.6))
        if interior_vertices(g):
            return g


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {(p, i) for i, p in zip(range(1, n), parents)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(n)))
    return Graph.from_edges(n, ((perm[u], perm[v]) for u, v in edges | set(extra)))


@pytest.fixture
def P3():
    return path_graph(3)


@pytest.fixture
def C4():
    return cycle_graph(4)


@pytest.fixture
def K3():
    return complete_graph(3)


@pytest.fixture
def K4():
    return complete_graph(4)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
