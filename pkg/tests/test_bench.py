import io
import math

import pytest

from cutscan.bench import (
    BenchRow,
    CSV_HEADER,
    derive_seed,
    efficiency_table,
    seed_sensitivity,
    sweep_degree,
    sweep_size,
    write_rows,
    write_table,
)
from cutscan.generator import InfeasibleSpecError
from cutscan.graph import complete_graph, path_graph

from .conftest import bowtie


def _row(it, cs, alg="recursive"):
    return BenchRow(10, 3.0, 0, alg, "min-degree", it, cs, 0.0)


def test_sweep_degree_rows():
    rows = sweep_degree(10, [3], 2, rng_seed=7)
    assert len(rows) == 4
    for rec, enh in zip(rows[::2], rows[1::2]):
        assert (rec.algorithm, enh.algorithm) == ("recursive", "enhanced")
        assert rec.trial_index == enh.trial_index
        assert enh.iterations <= rec.iterations
        assert enh.cutset_count == rec.cutset_count
        assert rec.efficiency_factor >= 1 and enh.efficiency_factor >= 1


def test_sweep_k4():
    rows = sweep_degree(4, [3], 1, rng_seed=0)
    assert [r.cutset_count for r in rows] == [7, 7]
    assert [r.cutset_count for r in sweep_size([4], 3, 1, 0)] == [7, 7]


def test_sweep_empty():
    assert sweep_degree(10, [3], 0, 1) == []
    assert sweep_size([], 3, 5, 1) == []


def test_sweep_size_rows():
    rows = sweep_size([10, 12], 3, 2, rng_seed=3)
    assert len(rows) == 8
    for i in range(0, 8, 2):
        assert rows[i].n == rows[i + 1].n
        assert rows[i].cutset_count == rows[i + 1].cutset_count


def test_sweep_error_names_grid_point():
    with pytest.raises(InfeasibleSpecError, match="n=4 avg_degree=1 trial=0"):
        sweep_degree(4, [1], 1, 0)


def test_parallel_matches_serial():
    a = sweep_size([10, 11], 3, 2, 5)
    b = sweep_size([10, 11], 3, 2, 5, jobs=2)
    strip = lambda rows: [(r.n, r.trial_index, r.algorithm, r.iterations, r.cutset_count) for r in rows]
    assert strip(a) == strip(b)


def test_derive_seed_stable():
    assert derive_seed(1, 10, 3, 0) == derive_seed(1, 10, 3, 0)
    assert derive_seed(1, 10, 3, 0) != derive_seed(1, 10, 3, 1)
    assert 0 <= derive_seed(0) < 2 ** 64


def test_seed_sensitivity_k4():
    rows = seed_sensitivity(complete_graph(4))
    assert len(rows) == 12
    assert {r.cutset_count for r in rows} == {7}
    assert {r.seed_policy for r in rows} == {f"vertex:{v}" for v in range(4)}


@pytest.mark.parametrize("g, count", [(path_graph(3), 2), (bowtie(), 6)])
def test_seed_sensitivity_counts(g, count):
    rows = seed_sensitivity(g)
    assert {r.cutset_count for r in rows} == {count}
    assert len(seed_sensitivity(g, include_brute=False)) == 2 * g.n


def test_efficiency_table_arithmetic():
    (t,) = efficiency_table([_row(10, 5)])
    assert t.efficiency_factor == 2.0
    (t,) = efficiency_table([_row(10, 5), _row(20, 5)])
    assert t.efficiency_factor == 3.0
    assert t.runs == 2


def test_efficiency_table_k4():
    rows = [r for r in sweep_degree(4, [3], 1, 0) if r.algorithm == "recursive"]
    (t,) = efficiency_table(rows)
    assert t.efficiency_factor == rows[0].iterations / 7


def test_efficiency_table_skips_empty_groups(caplog):
    assert efficiency_table([_row(1, 0)]) == []
    assert "omitted" in caplog.text


def test_csv_format():
    buf = io.StringIO()
    write_rows([_row(7, 3)], buf)
    lines = buf.getvalue().split("\n")
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1] == "10,3,0,recursive,min-degree,7,3,2.33333,0"
    buf = io.StringIO()
    write_table(efficiency_table([_row(7, 3)]), buf)
    assert buf.getvalue().splitlines()[1] == "10,3,recursive,1,7,3,2.33333"


def test_nan_factor_without_cutsets():
    assert math.isnan(_row(1, 0).efficiency_factor)


def test_k_n_iterations_converge():
    # dense end of the degree sweep: both algorithms within 2x of each other
    from cutscan.enhanced import enumerate_enhanced
    from cutscan.enumeration import enumerate_recursive
    for n in range(3, 10):
        g = complete_graph(n)
        r, e = enumerate_recursive(g), enumerate_enhanced(g)
        assert len(r.cutsets) == 2 ** (n - 1) - 1
        assert r.iterations >= len(r.cutsets) and e.iterations >= len(e.cutsets)
        assert r.iterations <= 2 * e.iterations
