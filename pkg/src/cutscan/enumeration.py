"""Minimal cutset enumeration: partition brute force and recursive contraction.

The recursive enumerators work in "rank space": vertices are relabelled by
their BFS rank from the seed so that bit ``r`` of a mask is the vertex of
rank ``r``. Contracting a set ``F`` into the seed is represented by the mask
of ``F`` itself; the neighbourhood of the contracted vertex is the frontier
of ``F`` in the original graph.

Ordering constraint: when the frontier candidates of a state are
``u1 < u2 < ... < uk`` (by rank), the branch that contracts ``ui`` may never
absorb ``u1 .. u(i-1)``. Those vertices are carried in a ``blocked`` mask.
Every connected vertex set containing the seed is then reached by exactly
one path of contractions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator, Literal

from .graph import (
    BfsOrdering,
    Cutset,
    Graph,
    GraphError,
    bfs_order,
    iter_bits,
    mask_connected,
    mask_of,
    require_connected,
)

DEFAULT_BRUTE_CAP = 20

CountMode = Literal["literal", "current"]


class CapExceededError(ValueError):
    """The exhaustive oracle refuses graphs above its vertex cap."""


@dataclass
class EnumerationReport:
    algorithm: str
    seed: int
    cutsets: list[Cutset] = field(default_factory=list)
    iterations: int = 0
    connectivity_checks: int = 0
    duplicates_detected: int = 0
    wall_time: float = 0.0
    # enhanced enumerator only
    pruned: int = 0
    transient_pruned: int = 0
    cut_throughs: int = 0
    transient_steps: int = 0

    @property
    def cutset_count(self) -> int:
        return len(self.cutsets)

    @property
    def efficiency_factor(self) -> float:
        return self.iterations / len(self.cutsets) if self.cutsets else float("nan")

    def summary(self) -> dict:
        d = {
            "algorithm": self.algorithm,
            "seed": self.seed,
            "cutsets": len(self.cutsets),
            "iterations": self.iterations,
            "connectivity_checks": self.connectivity_checks,
            "duplicates_detected": self.duplicates_detected,
        }
        if self.algorithm == "enhanced":
            d.update(pruned=self.pruned, transient_pruned=self.transient_pruned,
                     cut_throughs=self.cut_throughs, transient_steps=self.transient_steps)
        return d


@dataclass(frozen=True)
class SkippedStateCount:
    total: int
    mode: CountMode


# ---------------------------------------------------------------------------
# rank-space helpers

@dataclass(frozen=True)
class RankedGraph:
    """``g`` relabelled so that vertex ``r`` is the vertex of BFS rank ``r``."""

    graph: Graph
    order: BfsOrdering
    masks: tuple[int, ...]

    @classmethod
    def build(cls, g: Graph, seed: int) -> RankedGraph:
        require_connected(g)
        order = bfs_order(g, seed)
        rank = order.order_of
        masks = tuple(mask_of(rank[w] for w in g.adjacency[v]) for v in order.visit_sequence)
        return cls(g, order, masks)

    @property
    def full(self) -> int:
        return (1 << self.graph.n) - 1

    def to_vertices(self, mask: int) -> frozenset[int]:
        seq = self.order.visit_sequence
        return frozenset(seq[r] for r in iter_bits(mask))

    def to_original_mask(self, mask: int) -> int:
        seq = self.order.visit_sequence
        out = 0
        for r in iter_bits(mask):
            out |= 1 << seq[r]
        return out

    def cutset(self, mask: int) -> Cutset:
        return Cutset.from_mask(self.graph, self.to_original_mask(mask))


def _children(rm: tuple[int, ...], f: int, nb: int, blocked: int) -> list[tuple[int, int, int]]:
    """Child states in ascending rank of the contracted vertex."""
    out = []
    lower = 0
    cands = nb & ~f & ~blocked
    while cands:
        low = cands & -cands
        u = low.bit_length() - 1
        out.append((f | low, nb | rm[u], blocked | lower))
        lower |= low
        cands ^= low
    return out


def _check_seed(g: Graph, seed: int) -> None:
    if not 0 <= seed < g.n:
        raise GraphError(f"seed {seed} outside [0, {g.n})")


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceededError(f"brute force is capped at n <= {cap} vertices (graph has {n})")


# ---------------------------------------------------------------------------
# brute force

def iter_brute(g: Graph, report: EnumerationReport, cap: int = DEFAULT_BRUTE_CAP) -> Iterator[Cutset]:
    seed = report.seed
    _check_seed(g, seed)
    _check_cap(g.n, cap)
    require_connected(g)
    full = g.full_mask
    others = [v for v in range(g.n) if v != seed]
    masks = g.masks
    for code in range((1 << len(others)) - 1):
        side = 1 << seed
        for i, v in enumerate(others):
            if (code >> i) & 1:
                side |= 1 << v
        report.iterations += 1
        rest = full & ~side
        report.connectivity_checks += 1
        if mask_connected(masks, side):
            report.connectivity_checks += 1
            if mask_connected(masks, rest):
                yield Cutset.from_mask(g, side)


def enumerate_brute(g: Graph, seed: int = 0, cap: int = DEFAULT_BRUTE_CAP) -> EnumerationReport:
    """Check every bipartition of the vertex set (``2**(n-1) - 1`` of them)."""
    report = EnumerationReport("brute", seed)
    t0 = time.perf_counter()
    report.cutsets = list(iter_brute(g, report, cap))
    report.wall_time = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# connected subsets

def connected_subsets(g: Graph, seed: int) -> tuple[list[frozenset[int]], int]:
    """All connected vertex sets containing ``seed``, and the number of recursion steps."""
    _check_seed(g, seed)
    rg = RankedGraph.build(g, seed)
    rm = rg.masks
    out = []
    stack = [(1, rm[0], 0)]
    iterations = 0
    while stack:
        f, nb, blocked = stack.pop()
        iterations += 1
        out.append(rg.to_vertices(f))
        stack.extend(reversed(_children(rm, f, nb, blocked)))
    return out, iterations


# ---------------------------------------------------------------------------
# recursive contraction

def iter_recursive(g: Graph, report: EnumerationReport, dedupe: bool = True) -> Iterator[Cutset]:
    seed = report.seed
    _check_seed(g, seed)
    if g.n == 1:
        return
    rg = RankedGraph.build(g, seed)
    rm, full = rg.masks, rg.full
    seen: set[int] = set()
    stack = [(1, rm[0], 0)]
    while stack:
        f, nb, blocked = stack.pop()
        report.iterations += 1
        fresh = True
        if dedupe:
            if f in seen:
                report.duplicates_detected += 1
                fresh = False
            else:
                seen.add(f)
        if f != full:
            report.connectivity_checks += 1
            if mask_connected(rm, full & ~f) and fresh:
                yield rg.cutset(f)
        stack.extend(reversed(_children(rm, f, nb, blocked)))


def enumerate_recursive(g: Graph, seed: int = 0, dedupe: bool = True) -> EnumerationReport:
    """Emit ``<F, V-F>`` for every connected ``F`` containing the seed whose complement is connected."""
    report = EnumerationReport("recursive", seed)
    t0 = time.perf_counter()
    report.cutsets = list(iter_recursive(g, report, dedupe))
    report.wall_time = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# skipped (disconnected) state estimator

def count_skipped(g: Graph, seed: int, mode: CountMode = "current") -> SkippedStateCount:
    """Accumulate ``2**(c-1)`` over the scan tree.

    ``c = n - |candidates| - 1`` where ``n`` is the original vertex count in
    ``literal`` mode and the contracted graph's vertex count
    (``n - |F| + 1``) in ``current`` mode. Terms with ``c <= 0`` add nothing.
    This is an estimate; :func:`count_skipped_brute` gives the true count.
    """
    if mode not in ("literal", "current"):
        raise ValueError(f"unknown mode {mode!r}")
    _check_seed(g, seed)
    rg = RankedGraph.build(g, seed)
    rm = rg.masks
    n = g.n
    total = 0
    stack = [(1, rm[0], 0)]
    while stack:
        f, nb, blocked = stack.pop()
        k = (nb & ~f & ~blocked).bit_count()
        if k:
            size = n if mode == "literal" else n - f.bit_count() + 1
            c = size - k - 1
            if c > 0:
                total += 1 << (c - 1)
            stack.extend(_children(rm, f, nb, blocked))
    return SkippedStateCount(total, mode)


def count_skipped_brute(g: Graph, seed: int, cap: int = DEFAULT_BRUTE_CAP) -> int:
    """Number of vertex sets containing ``seed`` that induce a disconnected subgraph."""
    _check_seed(g, seed)
    _check_cap(g.n, cap)
    others = [v for v in range(g.n) if v != seed]
    count = 0
    for code in range(1 << len(others)):
        side = 1 << seed
        for i, v in enumerate(others):
            if (code >> i) & 1:
                side |= 1 << v
        if not mask_connected(g.masks, side):
            count += 1
    return count


def canonical(cutsets) -> set[frozenset[frozenset[int]]]:
    """Seed-independent set of bipartitions, for comparing enumerators."""
    return {c.key() for c in cutsets}
