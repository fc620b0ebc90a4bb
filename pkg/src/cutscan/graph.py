"""Graph representation, BFS ordering, connectivity and segment decomposition.

Vertex sets are handled as Python ints used as bitmasks internally (bit ``v``
set means vertex ``v`` is present); the public functions accept and return
ordinary sets.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import networkx as nx

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph or a graph that violates an operation's precondition."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class DisconnectedGraphError(GraphError):
    pass


# ---------------------------------------------------------------------------
# bitmask helpers

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reach(masks: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` using only vertices in ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def mask_connected(masks: Sequence[int], sub: int) -> bool:
    """True iff the subgraph induced by the non-empty mask ``sub`` is connected."""
    low = sub & -sub
    return reach(masks, low.bit_length() - 1, sub) == sub


def mask_components(masks: Sequence[int], sub: int) -> list[int]:
    comps = []
    while sub:
        low = sub & -sub
        comp = reach(masks, low.bit_length() - 1, sub)
        comps.append(comp)
        sub &= ~comp
    return comps


# ---------------------------------------------------------------------------
# graph type

@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0 .. n-1``."""

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be positive, got {self.n}")
        adj: list[set[int]] = [set() for _ in range(self.n)]
        normalized = []
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            normalized.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "masks", tuple(mask_of(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


# ---------------------------------------------------------------------------
# edge-list format

_HEADER = re.compile(r"p\s+(\S+)\s+(\S+)")


def load_graph(document: str) -> Graph:
    """Parse the edge-list text format.

    ``#`` lines are comments, the first other line is ``p <n> <m>`` and
    exactly ``m`` lines ``<u> <v>`` follow. Blank lines are ignored.
    """
    header = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(document.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "p":
                raise ParseError(lineno, f"expected header 'p <n> <m>', got {line!r}")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, f"non-integer header field in {line!r}") from None
            if n < 1 or m < 0:
                raise ParseError(lineno, f"invalid header counts n={n} m={m}")
            header = (n, m)
            continue
        if len(parts) != 2:
            raise ParseError(lineno, f"expected '<u> <v>', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer vertex id in {line!r}") from None
        n = header[0]
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"endpoint out of range [0, {n}) in {line!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key[0]}-{key[1]}")
        if len(edges) == header[1]:
            raise ParseError(lineno, f"more than the declared {header[1]} edges")
        seen.add(key)
        edges.append((u, v))
    if header is None:
        raise ParseError(0, "missing 'p <n> <m>' header")
    if len(edges) != header[1]:
        raise ParseError(0, f"header declares {header[1]} edges but {len(edges)} were given")
    return Graph.from_edges(header[0], edges)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_graph(fh.read())


def dump_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# BFS ordering and connectivity

@dataclass(frozen=True)
class BfsOrdering:
    seed: int
    order_of: tuple[int, ...]          # vertex -> rank
    visit_sequence: tuple[int, ...]    # rank -> vertex

    def rank(self, v: int) -> int:
        return self.order_of[v]


def bfs_order(g: Graph, seed: int) -> BfsOrdering:
    """BFS from ``seed``; neighbours are queued in ascending vertex id."""
    if not 0 <= seed < g.n:
        raise GraphError(f"seed {seed} outside [0, {g.n})")
    rank = [-1] * g.n
    rank[seed] = 0
    seq = [seed]
    queue = deque([seed])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if rank[w] < 0:
                rank[w] = len(seq)
                seq.append(w)
                queue.append(w)
    if len(seq) != g.n:
        raise DisconnectedGraphError(
            f"graph is disconnected: only {len(seq)} of {g.n} vertices reachable from {seed}"
        )
    return BfsOrdering(seed, tuple(rank), tuple(seq))


def components(g: Graph) -> list[set[int]]:
    return [set(iter_bits(c)) for c in mask_components(g.masks, g.full_mask)]


def is_connected(g: Graph) -> bool:
    return mask_connected(g.masks, g.full_mask)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"graph with {g.n} vertices is not connected")


def induced_connected(g: Graph, s: Iterable[int]) -> bool:
    sub = mask_of(s)
    if not sub:
        raise GraphError("vertex set must be non-empty")
    return mask_connected(g.masks, sub)


def is_exterior(g: Graph, v: int) -> bool:
    """True iff deleting ``v`` leaves the graph connected."""
    if g.n < 2:
        raise GraphError("exteriority needs at least two vertices")
    return mask_connected(g.masks, g.full_mask & ~(1 << v))


def frontier_of(g: Graph, f: Iterable[int]) -> set[int]:
    fm = mask_of(f)
    nb = 0
    for v in iter_bits(fm):
        nb |= g.masks[v]
    return set(iter_bits(nb & ~fm))


def complement_connected(g: Graph, f: Iterable[int]) -> bool:
    """Whether ``V - f`` induces a connected subgraph.

    Equivalent to the vertex obtained by contracting ``f`` being exterior.
    """
    rest = g.full_mask & ~mask_of(f)
    if not rest:
        raise GraphError("complement of the full vertex set is empty")
    return mask_connected(g.masks, rest)


def interior_vertices(g: Graph) -> set[int]:
    """Articulation points of ``g``."""
    return set(nx.articulation_points(g.to_networkx()))


def interior_vertices_by_deletion(g: Graph) -> set[int]:
    """Reference version of :func:`interior_vertices`: delete each vertex in turn."""
    if g.n < 2:
        return set()
    return {v for v in range(g.n) if not is_exterior(g, v)}


def crossing_edges(g: Graph, s: Iterable[int]) -> list[Edge]:
    sm = mask_of(s)
    return [(u, v) for u, v in g.edges if ((sm >> u) & 1) != ((sm >> v) & 1)]


# ---------------------------------------------------------------------------
# cutsets, segments, contraction state

@dataclass(frozen=True)
class Cutset:
    side_s: tuple[int, ...]
    side_t: tuple[int, ...]
    crossing_edges: tuple[Edge, ...]

    @classmethod
    def from_side(cls, g: Graph, side_s: Iterable[int]) -> Cutset:
        sm = mask_of(side_s)
        return cls.from_mask(g, sm)

    @classmethod
    def from_mask(cls, g: Graph, sm: int) -> Cutset:
        return cls(
            tuple(iter_bits(sm)),
            tuple(iter_bits(g.full_mask & ~sm)),
            tuple((u, v) for u, v in g.edges if ((sm >> u) & 1) != ((sm >> v) & 1)),
        )

    def key(self) -> frozenset[frozenset[int]]:
        """Seed-independent identity of the bipartition."""
        return frozenset((frozenset(self.side_s), frozenset(self.side_t)))


def is_valid_cutset(g: Graph, c: Cutset) -> bool:
    s, t = mask_of(c.side_s), mask_of(c.side_t)
    return (
        s and t and s & t == 0 and s | t == g.full_mask
        and mask_connected(g.masks, s) and mask_connected(g.masks, t)
        and list(c.crossing_edges) == crossing_edges(g, c.side_s)
    )


@dataclass(frozen=True)
class Segment:
    vertices: frozenset[int]
    edges: tuple[Edge, ...]

    def as_graph(self) -> tuple[Graph, tuple[int, ...]]:
        """Relabel to ``0..k-1``; returns the graph and the local->global map."""
        verts = tuple(sorted(self.vertices))
        local = {v: i for i, v in enumerate(verts)}
        return Graph.from_edges(len(verts), ((local[u], local[v]) for u, v in self.edges)), verts


def decompose_segments(g: Graph) -> list[Segment]:
    """Split a connected graph at its interior vertices into elementary segments."""
    require_connected(g)
    if g.m == 0:
        return [Segment(frozenset(range(g.n)), ())]
    segs = []
    for block in nx.biconnected_component_edges(g.to_networkx()):
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in block))
        verts = frozenset(x for e in edges for x in e)
        segs.append(Segment(verts, edges))
    segs.sort(key=lambda s: (sorted(s.vertices), s.edges))
    return segs


@dataclass(frozen=True)
class ContractionState:
    """Vertices absorbed into the contracted seed vertex.

    ``blocked`` holds frontier vertices that were passed over in favour of a
    higher-ranked sibling; they may never be absorbed below this state.
    """

    absorbed: frozenset[int]
    frontier: frozenset[int]
    blocked: frozenset[int]
    pivot_rank: int

    @classmethod
    def initial(cls, g: Graph, order: BfsOrdering) -> ContractionState:
        s = order.seed
        return cls(frozenset([s]), frozenset(g.adjacency[s]), frozenset(), 0)

    def candidates(self, order: BfsOrdering) -> list[int]:
        """Vertices that may be contracted next, in ascending BFS rank."""
        return sorted(self.frontier - self.blocked, key=order.rank)

    def absorb(self, g: Graph, order: BfsOrdering, u: int) -> ContractionState:
        cands = self.candidates(order)
        if u not in cands:
            raise GraphError(f"vertex {u} is not a legal contraction from {sorted(self.absorbed)}")
        passed = {c for c in cands if order.rank(c) < order.rank(u)}
        absorbed = self.absorbed | {u}
        frontier = (self.frontier | set(g.adjacency[u])) - absorbed
        return ContractionState(absorbed, frontier, self.blocked | passed, order.rank(u))

    @classmethod
    def replay(cls, g: Graph, order: BfsOrdering, sequence: Iterable[int]) -> ContractionState:
        state = cls.initial(g, order)
        for u in sequence:
            state = state.absorb(g, order, u)
        return state
