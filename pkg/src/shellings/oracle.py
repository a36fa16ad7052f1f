"""Brute-force shelling counters over edge subsets.

A shelling is an ordering of all edges in which every prefix forms a
connected subgraph.  The dynamic program fills, for each edge subset S,
the number of prefix-connected orderings of S, alongside a connectivity
bit per subset computed incrementally: S is connected iff some edge of S
touches a connected S minus that edge, seeded by singletons.  Subsets are
visited in increasing popcount order so all predecessors already exist.

These counters are the oracle every closed-form result is tested against,
so they stay deliberately direct.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GuardExceeded
from .graphs import Graph, is_connected

DEFAULT_MAX_DP_EDGES = 20
MAX_ENUM_EDGES = 8


@dataclass
class SubsetTable:
    """Per-subset ordering counts and connectivity for one graph."""

    edge_count: int
    counts: list[int]
    connected: bytearray
    adj_masks: tuple[int, ...]


def _edge_adjacency_masks(g: Graph) -> tuple[int, ...]:
    m = g.num_edges
    masks = [0] * m
    for i, (u1, v1) in enumerate(g.edges):
        for j in range(i + 1, m):
            u2, v2 = g.edges[j]
            if u1 in (u2, v2) or v1 in (u2, v2):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return tuple(masks)


def build_subset_table(g: Graph, max_edges: int = DEFAULT_MAX_DP_EDGES) -> SubsetTable:
    m = g.num_edges
    if m > max_edges:
        raise GuardExceeded(f"{m} edges exceeds DP guard {max_edges}")
    adj_masks = _edge_adjacency_masks(g)
    size = 1 << m
    counts = [0] * size
    connected = bytearray(size)
    counts[0] = 1
    for e in range(m):
        counts[1 << e] = 1
        connected[1 << e] = 1
    for k in range(2, m + 1):
        for combo in combinations(range(m), k):
            s = 0
            for e in combo:
                s |= 1 << e
            total = 0
            conn = False
            for e in combo:
                t = s ^ (1 << e)
                if connected[t]:
                    total += counts[t]
                    if adj_masks[e] & t:
                        conn = True
            if conn:
                counts[s] = total
                connected[s] = 1
    return SubsetTable(m, counts, connected, adj_masks)


def rooted_counts_from_table(table: SubsetTable, g: Graph, v: int) -> int:
    """Orderings whose first edge is incident to v, reusing connectivity."""
    m = table.edge_count
    connected = table.connected
    counts = [0] * (1 << m)
    for e, (a, b) in enumerate(g.edges):
        counts[1 << e] = 1 if v in (a, b) else 0
    for k in range(2, m + 1):
        for combo in combinations(range(m), k):
            s = 0
            for e in combo:
                s |= 1 << e
            if not connected[s]:
                continue
            total = 0
            for e in combo:
                t = s ^ (1 << e)
                if connected[t]:
                    total += counts[t]
            counts[s] = total
    return counts[(1 << m) - 1]


def count_shellings_dp(g: Graph, max_edges: int = DEFAULT_MAX_DP_EDGES) -> int:
    """Exact shelling count F(g); 0 if g is disconnected."""
    if not is_connected(g):
        return 0
    if g.num_edges == 0:
        return 1
    table = build_subset_table(g, max_edges)
    return table.counts[(1 << g.num_edges) - 1]


def count_rooted_shellings_dp(
    g: Graph,
    v: int,
    max_edges: int = DEFAULT_MAX_DP_EDGES,
    table: SubsetTable | None = None,
) -> int:
    """Shellings whose first edge touches v; 0 if g is disconnected.

    Pass a prebuilt table to amortize connectivity across roots.
    """
    if not 0 <= v < g.num_vertices:
        raise ValueError(f"vertex {v} out of range")
    if not is_connected(g):
        return 0
    if g.num_edges == 0:
        return 1
    if table is None:
        table = build_subset_table(g, max_edges)
    return rooted_counts_from_table(table, g, v)


def enumerate_shellings(g: Graph, limit: int | None = None) -> list[tuple[int, ...]]:
    """All shellings as tuples of canonical edge indices, backtracking.

    Truncates at ``limit`` orderings when given.  Guarded to 8 edges.
    """
    m = g.num_edges
    if m > MAX_ENUM_EDGES:
        raise GuardExceeded(f"{m} edges exceeds enumeration guard {MAX_ENUM_EDGES}")
    if not is_connected(g):
        return []
    if m == 0:
        return [()]
    adj_masks = _edge_adjacency_masks(g)
    out: list[tuple[int, ...]] = []
    order: list[int] = []

    def extend(used: int) -> bool:
        if limit is not None and len(out) >= limit:
            return False
        if len(order) == m:
            out.append(tuple(order))
            return limit is None or len(out) < limit
        for e in range(m):
            bit = 1 << e
            if used & bit:
                continue
            if used and not (adj_masks[e] & used):
                continue
            order.append(e)
            keep_going = extend(used | bit)
            order.pop()
            if not keep_going:
                return False
        return True

    extend(0)
    return out
