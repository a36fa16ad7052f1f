"""Graph representation, parsing, classification, and tree generation.

Graphs are undirected and simple, with vertices 0..n-1 and a canonical
edge list (each pair (u, v) with u < v, list sorted, duplicate-free), so
graph equality is plain tuple equality.  Labeled trees are generated
through Prufer sequences, exhaustively or at random from a splitmix64
stream.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import EdgeListParseError, GuardExceeded, NotATreeError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_edges(cls, num_vertices: int, edges) -> "Graph":
        """Canonicalize and validate an edge list."""
        canon = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u and v < num_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range for {num_vertices} vertices")
            canon.append((u, v))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        return cls(num_vertices, tuple(canon))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_tree(self) -> bool:
        return (
            self.num_vertices >= 1
            and self.num_edges == self.num_vertices - 1
            and is_connected(self)
        )

    def to_edge_list_text(self) -> str:
        """Render in the edge-list file format accepted by parse_edge_list.

        The header line is emitted only when the edges alone would not
        determine the vertex count (isolated vertices, empty graph).
        """
        covered = 1 + max((v for _, v in self.edges), default=-1)
        lines = [] if covered == self.num_vertices else [f"n {self.num_vertices}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse the edge-list format.

    Lines are blank, '#' comments, an optional single header "n <k>"
    (needed to represent isolated vertices), or an edge "u v".  LF and
    CRLF both accepted.  With a header, every vertex id must be < k.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    declared: int | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    max_id = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None:
                raise EdgeListParseError("duplicate header line", line_no)
            if len(parts) != 2 or not parts[1].isdigit():
                raise EdgeListParseError(f"malformed header {line!r}", line_no)
            declared = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise EdgeListParseError(f"malformed line {line!r}", line_no)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", line_no)
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise EdgeListParseError(f"duplicate edge ({u}, {v})", line_no)
        seen.add((u, v))
        edges.append((u, v))
        max_id = max(max_id, v)
    if declared is not None and max_id >= declared:
        raise EdgeListParseError(f"vertex id {max_id} >= declared n {declared}")
    n = declared if declared is not None else max_id + 1
    return Graph.from_edges(n, edges)


def is_connected(g: Graph) -> bool:
    """True iff one component spans all vertices; 0- and 1-vertex graphs count."""
    n = g.num_vertices
    if n <= 1:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    adj = g.adjacency
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


@dataclass(frozen=True)
class GraphClass:
    """Most specific class tag plus every coarser applicable tag."""

    primary: str
    tags: tuple[str, ...]
    bipartite_parts: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    path_endpoints: tuple[int, int] | None = None

    @property
    def part_sizes(self) -> tuple[int, int] | None:
        if self.bipartite_parts is None:
            return None
        a, b = self.bipartite_parts
        return (len(a), len(b))


def _bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Two-color a connected graph; None if an odd cycle exists."""
    n = g.num_vertices
    color = [-1] * n
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if color[w] == -1:
                color[w] = 1 - color[u]
                stack.append(w)
            elif color[w] == color[u]:
                return None
    return ([v for v in range(n) if color[v] == 0], [v for v in range(n) if color[v] == 1])


def classify(g: Graph) -> GraphClass:
    n, m = g.num_vertices, g.num_edges
    if not is_connected(g):
        return GraphClass("Disconnected", ("Disconnected",))
    tags: list[str] = []
    parts = None
    endpoints = None

    is_tree = m == n - 1
    degrees = [g.degree(v) for v in range(n)]
    is_path = is_tree and (n == 1 or max(degrees) <= 2)
    is_star = is_tree and n >= 2 and max(degrees) == n - 1
    is_complete = m == n * (n - 1) // 2

    if is_path:
        tags.append("Path")
        if n >= 2:
            ends = [v for v in range(n) if degrees[v] == 1]
            endpoints = (min(ends), max(ends))
    if is_star:
        tags.append("Star")
    if is_complete:
        tags.append("Complete")
    if n >= 2:
        two_color = _bipartition(g)
        if two_color is not None:
            a, b = two_color
            if a and b and m == len(a) * len(b):
                tags.append("CompleteBipartite")
                if (len(a), sorted(a)) > (len(b), sorted(b)):
                    a, b = b, a
                parts = (tuple(a), tuple(b))
    if is_tree:
        tags.append("Tree")
    tags.append("GeneralConnected")
    return GraphClass(tags[0], tuple(tags), parts, endpoints)


def bfs_distances(g: Graph, source: int) -> tuple[list[int], list[int]]:
    """BFS distances and discovery parents (parent[source] = source).

    Neighbors are scanned in ascending id order, so parents (and hence
    extracted paths) are deterministic.
    """
    n = g.num_vertices
    dist = [-1] * n
    parent = [-1] * n
    dist[source] = 0
    parent[source] = source
    queue = [source]
    for u in queue:
        for w in g.adjacency[u]:
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def tree_diameter(g: Graph) -> tuple[int, list[int]]:
    """Diameter (edge count) of a tree plus one realizing path.

    Double BFS; ties at every choice go to the smallest vertex id.
    """
    if not g.is_tree():
        raise NotATreeError("tree_diameter requires a tree")
    if g.num_vertices == 1:
        return 0, [0]
    dist0, _ = bfs_distances(g, 0)
    far = dist0.index(max(dist0))
    dist1, parent = bfs_distances(g, far)
    other = dist1.index(max(dist1))
    path = [other]
    while path[-1] != far:
        path.append(parent[path[-1]])
    path.reverse()
    return dist1[other], path


def prufer_decode(seq, n: int) -> Graph:
    """The unique labeled tree on n >= 2 vertices with this Prufer sequence.

    Standard decoding: repeatedly join the smallest-id leaf that no longer
    appears in the remaining sequence.
    """
    seq = list(seq)
    if n < 2:
        raise ValueError(f"prufer_decode requires n >= 2, got {n}")
    if len(seq) != n - 2:
        raise ValueError(f"sequence length {len(seq)} != n - 2 = {n - 2}")
    for s in seq:
        if not 0 <= s < n:
            raise ValueError(f"sequence entry {s} out of range 0..{n - 1}")
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        u = heapq.heappop(leaves)
        edges.append((u, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def prufer_encode(g: Graph) -> list[int]:
    """Inverse of prufer_decode: peel smallest leaves, record their neighbors."""
    if not g.is_tree():
        raise NotATreeError("prufer_encode requires a tree")
    n = g.num_vertices
    if n < 2:
        raise ValueError("prufer_encode requires n >= 2")
    degree = [g.degree(v) for v in range(n)]
    nbrs = {v: set(g.adjacency[v]) for v in range(n)}
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        u = heapq.heappop(leaves)
        w = nbrs[u].pop()
        nbrs[w].discard(u)
        seq.append(w)
        degree[w] -= 1
        if degree[w] == 1:
            heapq.heappush(leaves, w)
    return seq


MAX_TREE_ENUM_N = 9


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees, by Prufer sequence in lexicographic order."""
    if not 1 <= n <= MAX_TREE_ENUM_N:
        raise GuardExceeded(f"all_labeled_trees supports 1 <= n <= {MAX_TREE_ENUM_N}, got {n}")
    if n == 1:
        yield Graph.from_edges(1, [])
        return
    if n == 2:
        yield Graph.from_edges(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def path_graph(n: int) -> Graph:
    """The path 0 - 1 - ... - (n-1)."""
    if n < 1:
        raise ValueError(f"path_graph requires n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """The star on n vertices centered at 0."""
    if n < 2:
        raise ValueError(f"star_graph requires n >= 2, got {n}")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle_graph requires n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete_graph requires n >= 1, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(m: int, n: int) -> Graph:
    """K_{m,n} with part {0..m-1} against part {m..m+n-1}."""
    if m < 1 or n < 1:
        raise ValueError(f"part sizes must be positive, got ({m}, {n})")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


_SM64_MASK = (1 << 64) - 1


@dataclass
class SplitMix64:
    """splitmix64: x += 0x9E3779B97F4A7C15; two xor-shift-multiply mixes.

    Fixed, documented generator so seeded sweeps reproduce across
    implementations.
    """

    state: int

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _SM64_MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _SM64_MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _SM64_MASK
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection sampling."""
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree from a seeded splitmix64 Prufer draw."""
    if n < 1:
        raise ValueError(f"random_tree requires n >= 1, got {n}")
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = SplitMix64(seed & _SM64_MASK)
    seq = [rng.next_below(n) for _ in range(n - 2)]
    return prufer_decode(seq, n)
