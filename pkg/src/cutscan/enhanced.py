"""Pivot/cluster pruning on top of the recursive contraction enumerator.

When the contracted vertex is interior, the components of ``V - F`` are its
clusters. A cluster that contains a blocked vertex can never be fully
absorbed on the current branch (inabsorbable). With two or more such
clusters the complement stays disconnected in every descendant, so the
subtree is abandoned. With exactly one, no cutset can appear until the
absorbable clusters have been swallowed; the search keeps contracting
without checks (the cut-through phase) until the highest-ranked vertex of
the absorbable clusters is absorbed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Literal

from .enumeration import EnumerationReport, RankedGraph, _check_seed, _children
from .graph import (
    BfsOrdering,
    ContractionState,
    Cutset,
    Graph,
    GraphError,
    mask_components,
    mask_of,
)

Decision = Literal["emit", "prune", "cut-through", "descend"]


@dataclass(frozen=True)
class ClusterAnalysis:
    clusters: tuple[frozenset[int], ...]
    absorbable_flags: tuple[bool, ...]
    inabsorbable_count: int
    cut_through_target: int | None

    @property
    def decision(self) -> Decision:
        if self.inabsorbable_count >= 2:
            return "prune"
        if self.inabsorbable_count == 1:
            return "cut-through"
        return "descend"


@dataclass(frozen=True)
class CutThroughPhase:
    active: bool
    target: int | None = None


def _split_clusters(rm, rest: int, blocked: int) -> tuple[list[int], list[bool]]:
    comps = mask_components(rm, rest)
    # ascending lowest rank; mask_components already yields them that way
    return comps, [not (c & blocked) for c in comps]


def analyze_clusters(g: Graph, state: ContractionState, order: BfsOrdering) -> ClusterAnalysis:
    """Classify the clusters around an interior contracted vertex."""
    rank = order.order_of
    seq = order.visit_sequence
    rm = tuple(mask_of(rank[w] for w in g.adjacency[v]) for v in seq)
    f = mask_of(rank[v] for v in state.absorbed)
    blocked = mask_of(rank[v] for v in state.blocked)
    rest = ((1 << g.n) - 1) & ~f
    if not rest:
        raise GraphError("no clusters: every vertex is absorbed")
    comps, flags = _split_clusters(rm, rest, blocked)
    if len(comps) < 2:
        raise GraphError(f"contracted vertex {sorted(state.absorbed)} is exterior; no clusters to analyze")
    inabs = flags.count(False)
    target = None
    if inabs == 1:
        absorbable = 0
        for c, ok in zip(comps, flags):
            if ok:
                absorbable |= c
        target = seq[absorbable.bit_length() - 1]
    clusters = tuple(frozenset(seq[r] for r in range(g.n) if (c >> r) & 1) for c in comps)
    return ClusterAnalysis(clusters, tuple(flags), inabs, target)


def iter_enhanced(g: Graph, report: EnumerationReport, dedupe: bool = True,
                  trace: list | None = None) -> Iterator[Cutset]:
    """Enhanced scan; counters accumulate in ``report``.

    ``trace`` (optional) receives ``(event, absorbed, extra)`` tuples with
    events ``emit``, ``prune``, ``cut-through``, ``transient``,
    ``transient-prune`` and ``resume``.
    """
    seed = report.seed
    _check_seed(g, seed)
    if g.n == 1:
        return
    rg = RankedGraph.build(g, seed)
    rm, full = rg.masks, rg.full
    seen: set[int] = set()
    # (absorbed, neighbourhood, blocked, target rank or -1, must-absorb mask)
    stack = [(1, rm[0], 0, -1, 0)]
    while stack:
        f, nb, blocked, target, must = stack.pop()
        if target >= 0 and not (f >> target) & 1:
            report.transient_steps += 1
            if blocked & must:
                report.transient_pruned += 1
                if trace is not None:
                    trace.append(("transient-prune", rg.to_vertices(f), rg.to_vertices(blocked)))
                continue
            if trace is not None:
                trace.append(("transient", rg.to_vertices(f), None))
            for child in reversed(_children(rm, f, nb, blocked)):
                stack.append((*child, target, must))
            continue

        if target >= 0 and trace is not None:
            trace.append(("resume", rg.to_vertices(f), None))
        target, must = -1, 0
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
            comps, flags = _split_clusters(rm, full & ~f, blocked)
            if len(comps) == 1:
                if fresh:
                    if trace is not None:
                        trace.append(("emit", rg.to_vertices(f), None))
                    yield rg.cutset(f)
            else:
                inabs = flags.count(False)
                if inabs >= 2:
                    report.pruned += 1
                    if trace is not None:
                        trace.append(("prune", rg.to_vertices(f), rg.to_vertices(blocked)))
                    continue
                if inabs == 1:
                    for c, ok in zip(comps, flags):
                        if ok:
                            must |= c
                    target = must.bit_length() - 1
                    report.cut_throughs += 1
                    if trace is not None:
                        trace.append(("cut-through", rg.to_vertices(f), rg.order.visit_sequence[target]))
        for child in reversed(_children(rm, f, nb, blocked)):
            stack.append((*child, target, must))


def enumerate_enhanced(g: Graph, seed: int = 0, dedupe: bool = True,
                       trace: list | None = None) -> EnumerationReport:
    report = EnumerationReport("enhanced", seed)
    t0 = time.perf_counter()
    report.cutsets = list(iter_enhanced(g, report, dedupe, trace))
    report.wall_time = time.perf_counter() - t0
    return report
