from fractions import Fraction

import pytest

from shellings.bounds import (
    bound_report,
    degree_lower_bound,
    diameter_upper_bound_printed,
    double_broom,
    is_mid_spider_shape,
    longest_descending_path,
    longest_path,
    mid_spider,
    pull_branch_toward_middle,
    push_branch_from_root,
    weight_bound_coefficient,
)
from shellings.errors import NotATreeError
from shellings.graphs import Graph, classify, cycle_graph, path_graph, star_graph
from shellings.trees import all_root_counts, tree_count, weights


def test_degree_lower_bound_equality_cases():
    for n in (2, 4, 7):
        bound, predicted = degree_lower_bound(path_graph(n))
        assert bound == 2 ** (n - 2) == tree_count(path_graph(n))
        assert predicted
    bound, predicted = degree_lower_bound(star_graph(5))
    assert bound == 24 == tree_count(star_graph(5))
    assert predicted


def test_degree_lower_bound_double_broom_strict():
    g = double_broom(2, 3, 2)  # n = 6
    bound, predicted = degree_lower_bound(g)
    assert bound == 24
    assert tree_count(g) == 30
    assert not predicted


def test_degree_lower_bound_rejects_non_tree():
    with pytest.raises(NotATreeError):
        degree_lower_bound(cycle_graph(4))


@pytest.mark.parametrize(
    "n,ell,expected",
    [(3, 2, 4), (5, 4, 16), (4, 3, 8), (5, 3, 28), (2, 1, 2)],
)
def test_printed_diameter_bound_values(n, ell, expected):
    assert diameter_upper_bound_printed(n, ell) == expected


def test_printed_diameter_bound_range():
    with pytest.raises(ValueError):
        diameter_upper_bound_printed(4, 4)
    with pytest.raises(ValueError):
        diameter_upper_bound_printed(4, 0)


def test_mid_spider_shapes():
    spider = mid_spider(6, 2)  # a star centered on the path middle v_1
    assert spider.degree(1) == 5
    assert classify(spider).primary == "Star"
    assert mid_spider(5, 4) == path_graph(5)
    g = mid_spider(5, 3)
    assert g.degree(1) == 3  # leaf lands on v_1 = floor(3/2)
    assert is_mid_spider_shape(g)
    with pytest.raises(ValueError):
        mid_spider(5, 1)


def test_mid_spider_shape_detection():
    assert is_mid_spider_shape(path_graph(6))
    assert is_mid_spider_shape(star_graph(5))
    assert not is_mid_spider_shape(double_broom(2, 3, 2))
    assert not is_mid_spider_shape(cycle_graph(5))
    # leaves at v_1 of a length-4 path branch away from the middle
    assert not is_mid_spider_shape(Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]))


def test_weight_bound_coefficient_anchors():
    star = star_graph(6)
    assert weight_bound_coefficient(star, 0) == 1
    assert tree_count(star) == all_root_counts(star)[0]  # bound tight at the center
    n = 6
    path = path_graph(n)
    assert weight_bound_coefficient(path, 0) == 2 ** (n - 2)
    assert tree_count(path) == 2 ** (n - 2) * all_root_counts(path)[0]  # tight at the end
    for v in range(n):
        assert weight_bound_coefficient(path, v) <= 2 ** (n - 2)


def test_longest_path_deterministic_lex_smallest():
    assert longest_path(path_graph(4)) == [0, 1, 2, 3]
    relabeled = Graph.from_edges(4, [(3, 2), (2, 1), (1, 0)])
    assert longest_path(relabeled) == [0, 1, 2, 3]
    assert longest_descending_path(star_graph(4), 1) == [1, 0, 2]


def test_push_branch_examples():
    assert push_branch_from_root(star_graph(5), 0) is None
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)])
    pushed = push_branch_from_root(g, 0)
    assert pushed == Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])


def test_push_moves_whole_subtree_up_one_level():
    # branch at v_1 carrying its own child: children of v' reattach to v_2
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 6)])
    pushed = push_branch_from_root(g, 0)
    assert pushed == Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (2, 6)])


def test_push_fixpoint_collects_branches_at_second_to_last():
    g = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (4, 5), (2, 6)])
    cur, steps = g, 0
    while True:
        nxt = push_branch_from_root(cur, 0)
        if nxt is None:
            break
        assert weights(nxt, 0).total() >= weights(cur, 0).total()
        cur, steps = nxt, steps + 1
        assert steps < 30
    path = longest_descending_path(cur, 0)
    off = [u for u in range(7) if u not in path]
    assert all(path[-2] in cur.adjacency[u] for u in off)


def test_pull_branch_examples():
    assert pull_branch_toward_middle(path_graph(5)) is None
    assert pull_branch_toward_middle(mid_spider(7, 4)) is None
    assert pull_branch_toward_middle(star_graph(6)) is None
    spider_off_center = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)])
    pulled = pull_branch_toward_middle(spider_off_center)
    assert pulled == Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])


def test_pull_normalizes_deep_branches_first():
    # hanging path 2-5-6 keeps the diameter at 4 and flattens onto v_2
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)])
    pulled = pull_branch_toward_middle(g)
    assert pulled == Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (2, 6)])
    assert tree_count(pulled) >= tree_count(g)
    assert pull_branch_toward_middle(pulled) is None


def test_pull_iterates_to_mid_spider():
    g = double_broom(3, 3, 4)
    counts = [tree_count(g)]
    cur, steps = g, 0
    while True:
        nxt = pull_branch_toward_middle(cur)
        if nxt is None:
            break
        counts.append(tree_count(nxt))
        cur, steps = nxt, steps + 1
        assert steps < 40
    assert is_mid_spider_shape(cur)
    assert all(a <= b for a, b in zip(counts, counts[1:]))


def test_double_broom_family_counts():
    # middle length 2 instances of the (2,3) and (2,4) families
    g23 = double_broom(2, 3, 2)
    n = g23.num_vertices
    assert tree_count(g23) == 2 ** (n - 1) - 2
    g24 = double_broom(2, 4, 2)
    n = g24.num_vertices
    assert tree_count(g24) == 6 * (2 ** (n - 2) - n + 1)


def test_bound_report_fields():
    br = bound_report(path_graph(5))
    assert br.exact == 8
    assert br.degree_lower == 8 and br.degree_equality_predicted
    assert br.diameter == 4
    assert br.diameter_upper_printed == 16
    assert br.mid_spider_exact == 8
    assert br.printed_vs_extremal_gap == Fraction(2)
    assert br.per_root_weight_bounds == (8, 7, 4, 7, 8)
    single_edge = bound_report(path_graph(2))
    assert single_edge.mid_spider_exact == 1
    assert single_edge.diameter_upper_printed == 2
