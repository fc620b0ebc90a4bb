"""Iteration-count experiments: degree/size sweeps, seed sensitivity, efficiency tables."""

from __future__ import annotations

import csv
import hashlib
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from statistics import fmean
from typing import IO, Iterable, Sequence

from .enumeration import DEFAULT_BRUTE_CAP, canonical
from .generator import GenerationError, GenSpec, random_monolithic
from .graph import Graph
from .runner import enumerate_cutsets, min_degree_seed

log = logging.getLogger(__name__)

CSV_HEADER = ["n", "avg_degree", "trial", "algorithm", "seed_policy", "iterations",
              "cutsets", "efficiency_factor", "wall_time_ms"]
TABLE_HEADER = ["n", "avg_degree", "algorithm", "runs", "mean_iterations", "mean_cutsets",
                "efficiency_factor"]
SWEEP_ALGORITHMS = ("recursive", "enhanced")


@dataclass(frozen=True)
class BenchRow:
    n: int
    avg_degree: float
    trial_index: int
    algorithm: str
    seed_policy: str
    iterations: int
    cutset_count: int
    wall_time: float

    @property
    def efficiency_factor(self) -> float:
        return self.iterations / self.cutset_count if self.cutset_count else float("nan")


@dataclass(frozen=True)
class EfficiencyRow:
    n: int
    avg_degree: float
    algorithm: str
    runs: int
    mean_iterations: float
    mean_cutsets: float

    @property
    def efficiency_factor(self) -> float:
        return self.mean_iterations / self.mean_cutsets


def derive_seed(rng_seed: int, *coords) -> int:
    """64-bit trial seed from the sweep seed and grid coordinates."""
    text = "|".join(str(x) for x in (rng_seed, *coords))
    return int.from_bytes(hashlib.blake2b(text.encode(), digest_size=8).digest(), "big")


def _trial(task) -> list[BenchRow]:
    n, d, trial, rng_seed, algorithms, max_retries = task
    spec = GenSpec(n, d, derive_seed(rng_seed, n, d, trial), True, max_retries)
    try:
        g = random_monolithic(spec)
    except (GenerationError, ValueError) as exc:
        raise type(exc)(f"at n={n} avg_degree={d} trial={trial}: {exc}") from exc
    seed = min_degree_seed(g)
    rows = []
    for alg in algorithms:
        rep = enumerate_cutsets(g, alg, seed)
        rows.append(BenchRow(n, float(d), trial, alg, "min-degree", rep.iterations,
                             len(rep.cutsets), rep.wall_time))
    return rows


def _run(tasks: list, jobs: int) -> list[BenchRow]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_trial, tasks))
    else:
        chunks = [_trial(t) for t in tasks]
    return [row for chunk in chunks for row in chunk]


def sweep_degree(n: int, degrees: Sequence, trials: int, rng_seed: int,
                 algorithms: Sequence[str] = SWEEP_ALGORITHMS, jobs: int = 1,
                 max_retries: int = 200_000) -> list[BenchRow]:
    tasks = [(n, d, t, rng_seed, tuple(algorithms), max_retries)
             for d in degrees for t in range(trials)]
    return _run(tasks, jobs)


def sweep_size(sizes: Sequence[int], avg_degree, trials: int, rng_seed: int,
               algorithms: Sequence[str] = SWEEP_ALGORITHMS, jobs: int = 1,
               max_retries: int = 200_000) -> list[BenchRow]:
    tasks = [(n, avg_degree, t, rng_seed, tuple(algorithms), max_retries)
             for n in sizes for t in range(trials)]
    return _run(tasks, jobs)


def seed_sensitivity(g: Graph, include_brute: bool = True,
                     brute_cap: int = DEFAULT_BRUTE_CAP) -> list[BenchRow]:
    """One row per (seed vertex, algorithm); every row must see the same cutsets."""
    avg = 2 * g.m / g.n
    algorithms = ("brute", "recursive", "enhanced") if include_brute else SWEEP_ALGORITHMS
    rows = []
    reference = None
    brute = None
    for seed in range(g.n):
        for alg in algorithms:
            if alg == "brute":
                # seed-independent; computed once
                if brute is None:
                    brute = enumerate_cutsets(g, "brute", seed, brute_cap)
                rep = brute
            else:
                rep = enumerate_cutsets(g, alg, seed)
            found = canonical(rep.cutsets)
            if reference is None:
                reference = found
            elif found != reference:
                raise RuntimeError(f"{alg} from seed {seed} disagrees with the other runs")
            rows.append(BenchRow(g.n, avg, 0, alg, f"vertex:{seed}", rep.iterations,
                                 len(rep.cutsets), rep.wall_time))
    return rows


def efficiency_table(rows: Iterable[BenchRow]) -> list[EfficiencyRow]:
    """Group by (n, degree, algorithm); factor = mean iterations / mean cutsets."""
    groups: dict[tuple, list[BenchRow]] = {}
    for r in rows:
        groups.setdefault((r.n, r.avg_degree, r.algorithm), []).append(r)
    out = []
    for (n, d, alg), grp in groups.items():
        mean_c = fmean(r.cutset_count for r in grp)
        if mean_c == 0:
            log.warning("group n=%s avg_degree=%s algorithm=%s has no cutsets; omitted", n, d, alg)
            continue
        out.append(EfficiencyRow(n, d, alg, len(grp), fmean(r.iterations for r in grp), mean_c))
    return out


def _g(x: float) -> str:
    return format(x, ".6g")


def write_rows(rows: Iterable[BenchRow], stream: IO[str], timing: bool = True) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.n, _g(r.avg_degree), r.trial_index, r.algorithm, r.seed_policy,
                    r.iterations, r.cutset_count, _g(r.efficiency_factor),
                    _g(r.wall_time * 1000) if timing else ""])


def write_table(table: Iterable[EfficiencyRow], stream: IO[str]) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    for t in table:
        w.writerow([t.n, _g(t.avg_degree), t.algorithm, t.runs, _g(t.mean_iterations),
                    _g(t.mean_cutsets), _g(t.efficiency_factor)])
