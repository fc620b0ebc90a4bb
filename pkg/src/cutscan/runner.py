"""Algorithm dispatch, seed policies and per-segment enumeration."""

from __future__ import annotations

import time
from typing import Iterator

from .enhanced import iter_enhanced
from .enumeration import DEFAULT_BRUTE_CAP, EnumerationReport, iter_brute, iter_recursive
from .graph import Cutset, Graph, GraphError, decompose_segments, reach

ALGORITHMS = ("brute", "recursive", "enhanced")


def min_degree_seed(g: Graph) -> int:
    """Lowest-degree vertex, ties to the lowest id."""
    return min(range(g.n), key=lambda v: (g.degree(v), v))


def iter_cutsets(g: Graph, algorithm: str, report: EnumerationReport,
                 brute_cap: int = DEFAULT_BRUTE_CAP) -> Iterator[Cutset]:
    if algorithm == "brute":
        return iter_brute(g, report, brute_cap)
    if algorithm == "recursive":
        return iter_recursive(g, report)
    if algorithm == "enhanced":
        return iter_enhanced(g, report)
    raise ValueError(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}")


def enumerate_cutsets(g: Graph, algorithm: str = "enhanced", seed: int | None = None,
                      brute_cap: int = DEFAULT_BRUTE_CAP) -> EnumerationReport:
    if seed is None:
        seed = min_degree_seed(g)
    report = EnumerationReport(algorithm, seed)
    t0 = time.perf_counter()
    report.cutsets = list(iter_cutsets(g, algorithm, report, brute_cap))
    report.wall_time = time.perf_counter() - t0
    return report


def lift_cutset(g: Graph, edges, seed: int) -> Cutset:
    """Whole-graph cutset whose crossing edges are ``edges``; ``side_s`` holds ``seed``."""
    cut = {(min(u, v), max(u, v)) for u, v in edges}
    masks = list(g.masks)
    for u, v in cut:
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
    side = reach(masks, seed, g.full_mask)
    c = Cutset.from_mask(g, side)
    if set(c.crossing_edges) != cut:
        raise GraphError(f"edge set {sorted(cut)} is not a minimal cutset of the graph")
    return c


def enumerate_by_segments(g: Graph, algorithm: str = "enhanced", seed: int | None = None,
                          brute_cap: int = DEFAULT_BRUTE_CAP) -> tuple[list, list[Cutset], list[EnumerationReport]]:
    """Enumerate each elementary segment separately and lift the results.

    Returns ``(segments, cutsets, per-segment reports)``; the cutsets are
    expressed on the whole graph with ``side_s`` containing ``seed``.
    """
    if seed is None:
        seed = min_degree_seed(g)
    segments = decompose_segments(g)
    cutsets: list[Cutset] = []
    reports = []
    for seg in segments:
        sub, verts = seg.as_graph()
        local_seed = min_degree_seed(sub)
        rep = enumerate_cutsets(sub, algorithm, local_seed, brute_cap)
        reports.append(rep)
        for c in rep.cutsets:
            edges = [(verts[u], verts[v]) for u, v in c.crossing_edges]
            cutsets.append(lift_cutset(g, edges, seed))
    return segments, cutsets, reports

