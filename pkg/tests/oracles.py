"""Reference implementations built on networkx, independent of the bitmask code."""

from collections import deque
from itertools import combinations

import networkx as nx

from cutscan.graph import Graph


def nx_graph(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def induced_is_connected(h: nx.Graph, vertices) -> bool:
    vertices = list(vertices)
    return bool(vertices) and nx.is_connected(h.subgraph(vertices))


def bfs_ranks(g: Graph, seed: int) -> dict[int, int]:
    """Level-synchronous BFS; each level's discoveries follow parent order then id."""
    h = nx_graph(g)
    ranks = {seed: 0}
    level = [seed]
    while level:
        nxt = []
        for u in level:
            for w in sorted(h.neighbors(u)):
                if w not in ranks:
                    ranks[w] = len(ranks)
                    nxt.append(w)
        level = nxt
    return ranks


def seed_subsets(g: Graph, seed: int):
    others = [v for v in range(g.n) if v != seed]
    for k in range(len(others) + 1):
        for extra in combinations(others, k):
            yield frozenset((seed, *extra))


def connected_seed_subsets(g: Graph, seed: int) -> set[frozenset[int]]:
    h = nx_graph(g)
    return {s for s in seed_subsets(g, seed) if induced_is_connected(h, s)}


def all_cutsets(g: Graph) -> set[frozenset[frozenset[int]]]:
    """Every bipartition with both sides connected, as a pair of frozensets."""
    h = nx_graph(g)
    everything = frozenset(range(g.n))
    out = set()
    for s in seed_subsets(g, 0):
        t = everything - s
        if t and induced_is_connected(h, s) and induced_is_connected(h, t):
            out.add(frozenset((s, t)))
    return out


def cut_edge_sets(g: Graph) -> set[frozenset[tuple[int, int]]]:
    out = set()
    for pair in all_cutsets(g):
        s = next(iter(pair))
        out.add(frozenset((u, v) for u, v in g.edges if (u in s) != (v in s)))
    return out


def articulation_by_deletion(g: Graph) -> set[int]:
    h = nx_graph(g)
    return {v for v in range(g.n) if g.n > 1 and not nx.is_connected(h.subgraph(set(range(g.n)) - {v}))}


def components_bfs(n: int, edges) -> list[set[int]]:
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, q = {s}, deque([s])
        while q:
            for w in adj[q.popleft()]:
                if w not in comp:
                    comp.add(w)
                    q.append(w)
        seen |= comp
        comps.append(comp)
    return comps
