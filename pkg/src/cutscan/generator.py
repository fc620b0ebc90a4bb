"""Seeded random connected / monolithic graphs with a fixed edge count.

Randomness comes from :class:`random.Random` (MT19937) and is consumed only
through ``getrandbits``, whose output stream is stable across Python
versions. Edge sets are drawn uniformly: a partial Fisher-Yates shuffle over
the ``n(n-1)/2`` vertex pairs in lexicographic order, using rejection
sampling for bounded integers. Draws are repeated until the graph is
connected and, if requested, has no interior vertex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, dump_graph, interior_vertices, mask_connected

RNG_NAME = "mt19937-getrandbits"


class InfeasibleSpecError(ValueError):
    pass


class GenerationError(RuntimeError):
    pass


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def edge_count(n: int, avg_degree) -> int:
    """``round(n * d / 2)`` with ties rounded half-up."""
    half = _as_fraction(avg_degree) * n / 2
    return int(half + Fraction(1, 2)) if half >= 0 else 0


@dataclass(frozen=True)
class GenSpec:
    n: int
    avg_degree: float | int | Fraction
    rng_seed: int
    require_monolithic: bool = True
    max_retries: int = 200_000

    @property
    def m(self) -> int:
        return edge_count(self.n, self.avg_degree)

    def validate(self) -> None:
        n, m = self.n, self.m
        if n < 1:
            raise InfeasibleSpecError(f"n must be positive, got {n}")
        if self.require_monolithic and n < 2:
            raise InfeasibleSpecError("a monolithic graph needs at least 2 vertices")
        if _as_fraction(self.avg_degree) > n - 1:
            raise InfeasibleSpecError(f"avg_degree {self.avg_degree} exceeds n-1 = {n - 1}")
        if m < n - 1:
            raise InfeasibleSpecError(f"m = {m} edges < n-1 = {n - 1}: cannot be connected")
        if self.require_monolithic and n >= 3 and m < n:
            raise InfeasibleSpecError(f"m = {m} edges < n = {n}: cannot be monolithic")
        if self.max_retries < 1:
            raise InfeasibleSpecError("max_retries must be positive")

    def describe(self) -> str:
        return (f"n={self.n} avg_degree={self.avg_degree} m={self.m} rng_seed={self.rng_seed} "
                f"require_monolithic={self.require_monolithic} rng={RNG_NAME}")


def _below(rng: random.Random, k: int) -> int:
    bits = k.bit_length()
    while True:
        x = rng.getrandbits(bits)
        if x < k:
            return x


def _sample_edges(rng: random.Random, pairs: list[tuple[int, int]], m: int) -> list[tuple[int, int]]:
    pool = list(pairs)
    total = len(pool)
    for i in range(m):
        j = i + _below(rng, total - i)
        pool[i], pool[j] = pool[j], pool[i]
    return sorted(pool[:m])


def random_monolithic(spec: GenSpec) -> Graph:
    spec.validate()
    n, m = spec.n, spec.m
    rng = random.Random(spec.rng_seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(spec.max_retries):
        edges = _sample_edges(rng, pairs, m)
        deg = [0] * n
        masks = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        if not mask_connected(masks, (1 << n) - 1):
            continue
        if spec.require_monolithic and n >= 3:
            # a vertex of degree 1 is always attached through an interior vertex
            if min(deg) < 2:
                continue
            g = Graph(n, tuple(edges))
            if interior_vertices(g):
                continue
            return g
        return Graph(n, tuple(edges))
    kind = "connected monolithic" if spec.require_monolithic else "connected"
    raise GenerationError(f"no {kind} graph found in {spec.max_retries} draws ({spec.describe()})")


def generated_document(spec: GenSpec) -> str:
    return dump_graph(random_monolithic(spec), [f"GenSpec {spec.describe()}"])
