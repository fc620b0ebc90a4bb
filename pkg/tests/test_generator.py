from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cutscan.generator import (
    GenerationError,
    GenSpec,
    InfeasibleSpecError,
    edge_count,
    generated_document,
    random_monolithic,
)
from cutscan.graph import complete_graph, interior_vertices, is_connected, load_graph


def test_forced_k4():
    for seed in (0, 1, 99):
        assert random_monolithic(GenSpec(4, 3, seed)) == complete_graph(4)


def test_seeded_instance():
    g = random_monolithic(GenSpec(10, 3, 42))
    assert g.m == 15 and is_connected(g) and interior_vertices(g) == set()
    # regression pin for the documented generator
    assert g.edges == ((0, 2), (0, 5), (0, 7), (0, 8), (1, 3), (1, 6), (1, 8), (2, 3),
                       (2, 6), (3, 4), (3, 6), (4, 5), (4, 6), (6, 9), (7, 9))


@pytest.mark.parametrize("spec, fragment", [
    (GenSpec(4, 1, 0), "cannot be connected"),
    (GenSpec(4, 4, 0), "exceeds n-1"),
    (GenSpec(5, 1.6, 0), "cannot be monolithic"),
    (GenSpec(1, 0, 0), "at least 2"),
])
def test_infeasible(spec, fragment):
    with pytest.raises(InfeasibleSpecError, match=fragment):
        random_monolithic(spec)


def test_retry_exhaustion():
    # m = n on 20 vertices: only a Hamiltonian cycle qualifies
    with pytest.raises(GenerationError, match="5 draws"):
        random_monolithic(GenSpec(20, 2, 0, max_retries=5))


def test_edge_count_rounding():
    assert edge_count(10, 3) == 15
    assert edge_count(5, 3) == 8          # 7.5 rounds up
    assert edge_count(3, 1.0) == 2        # 1.5 rounds up
    assert edge_count(7, Fraction(5, 2)) == 9   # 8.75
    assert edge_count(4, 2.2) == 4        # 4.4


def test_connected_only():
    g = random_monolithic(GenSpec(12, 2, 3, require_monolithic=False))
    assert is_connected(g) and g.m == 12


@given(st.integers(5, 14), st.sampled_from([2.5, 3, 3.5, 4]), st.integers(0, 2 ** 64 - 1))
@settings(max_examples=40, deadline=None)
def test_outputs_satisfy_contract(n, d, seed):
    spec = GenSpec(n, d, seed)
    g = random_monolithic(spec)
    assert g.n == n and g.m == edge_count(n, d)
    assert is_connected(g) and not interior_vertices(g)
    assert random_monolithic(spec).edges == g.edges


def test_mean_degree():
    total = 0
    for seed in range(100):
        g = random_monolithic(GenSpec(10, 3, seed))
        total += 2 * g.m / g.n
    assert abs(total / 100 - 3) <= 0.2


def test_document_header():
    doc = generated_document(GenSpec(6, 3, 7))
    assert doc.startswith("# GenSpec n=6 avg_degree=3 m=9 rng_seed=7")
    assert load_graph(doc) == random_monolithic(GenSpec(6, 3, 7))
