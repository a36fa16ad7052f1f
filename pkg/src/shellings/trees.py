"""Exact shelling counts for trees.

Rooting a tree at v turns counting into a hook product: the number of
shellings whose first edge touches v is n! divided by the product of all
subtree sizes.  Adjacent roots differ by the simple ratio
F(T_v)/F(T_u) = |T_u(v)| / (n - |T_u(v)|), so one hook evaluation plus a
breadth-first propagation yields every root's count, and half their sum
is the total (each shelling's first edge has two endpoints).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bigmath import Nat, Rat, factorial
from .errors import NotATreeError
from .graphs import Graph


@dataclass(frozen=True)
class RootedTree:
    """Parent and subtree-size arrays for a tree rooted at ``root``.

    ``order`` is the BFS traversal from the root with neighbor lists
    sorted ascending, so the arrays are reproducible.
    """

    root: int
    parent: tuple[int, ...]
    subtree_size: tuple[int, ...]
    order: tuple[int, ...]


def root_tree(g: Graph, v: int) -> RootedTree:
    if not g.is_tree():
        raise NotATreeError("root_tree requires a tree")
    n = g.num_vertices
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range")
    parent = [-1] * n
    parent[v] = v
    order = [v]
    for u in order:
        for w in g.adjacency[u]:
            if parent[w] == -1 and w != v:
                parent[w] = u
                order.append(w)
    size = [1] * n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    return RootedTree(v, tuple(parent), tuple(size), tuple(order))


def hook_count(rt: RootedTree) -> Nat:
    """F(T_v) = n! / prod of subtree sizes; the division is exact."""
    n = len(rt.subtree_size)
    denom = 1
    for s in rt.subtree_size:
        denom *= s
    q, r = divmod(factorial(n), denom)
    assert r == 0, "hook product must divide n!"
    return q


def all_root_counts(g: Graph, seed_root: int = 0) -> list[Nat]:
    """F(T_v) for every vertex v, by one hook count plus ratio propagation.

    Each propagation step multiplies by the child subtree size and divides
    by its complement; every intermediate value is an integer and the
    division is asserted exact.
    """
    if not g.is_tree():
        raise NotATreeError("all_root_counts requires a tree")
    n = g.num_vertices
    rt = root_tree(g, seed_root)
    counts: list[Nat] = [0] * n
    counts[seed_root] = hook_count(rt)
    size = rt.subtree_size
    for u in rt.order[1:]:
        w = rt.parent[u]
        q, r = divmod(counts[w] * size[u], n - size[u])
        assert r == 0, "root-ratio propagation must stay integral"
        counts[u] = q
    return counts


def tree_count(g: Graph) -> Nat:
    """F(T) = half the sum of all rooted counts; the sum is even.

    The single-vertex tree has one (empty) shelling and no first edge to
    halve over, so it is its own base case.
    """
    if not g.is_tree():
        raise NotATreeError("tree_count requires a tree")
    if g.num_vertices <= 1:
        return 1
    total = sum(all_root_counts(g))
    q, r = divmod(total, 2)
    assert r == 0, "sum of rooted counts must be even"
    return q


@dataclass(frozen=True)
class WeightVector:
    """Per-vertex ratios W(u) = F(T_u) / F(T_root) for a fixed root."""

    root: int
    weights: tuple[Rat, ...]

    def total(self) -> Rat:
        return sum(self.weights, Fraction(0))


def weights(g: Graph, v: int) -> WeightVector:
    """W(u) by multiplying edge ratios size/(n - size) down from the root."""
    if not g.is_tree():
        raise NotATreeError("weights requires a tree")
    n = g.num_vertices
    rt = root_tree(g, v)
    w: list[Rat] = [Fraction(0)] * n
    w[v] = Fraction(1)
    size = rt.subtree_size
    for u in rt.order[1:]:
        w[u] = w[rt.parent[u]] * Fraction(size[u], n - size[u])
    return WeightVector(v, tuple(w))
