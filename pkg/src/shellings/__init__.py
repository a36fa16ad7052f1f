"""Exact counting of graph shellings.

A shelling of a graph is an ordering of its edges in which every prefix
forms a connected subgraph.  This package counts them exactly: a subset
dynamic program usable as ground truth on small graphs, closed forms for
complete and complete bipartite graphs, hook-product machinery for trees,
degree/diameter bounds with their extremal shapes and transforms, and
exact verifiers for the supporting binomial and Gamma-product identities.
"""

from .bigmath import (
    GammaProduct,
    Nat,
    Rat,
    binomial,
    catalan,
    factorial,
    gamma_product_reduce,
    gbinom_int_diff,
    gbinom_lower_int,
)
from .bounds import (
    BoundReport,
    bound_report,
    degree_lower_bound,
    diameter_upper_bound_printed,
    double_broom,
    is_mid_spider_shape,
    mid_spider,
    pull_branch_toward_middle,
    push_branch_from_root,
    weight_bound_coefficient,
)
from .closed_forms import (
    b_sequence,
    complete_bipartite_count,
    complete_graph_count,
    path_count,
    rooted_path_count,
    stanley_inner_sum,
    stanley_sum_count,
)
from .errors import EdgeListParseError, GuardExceeded, NotATreeError
from .graphs import (
    Graph,
    GraphClass,
    all_labeled_trees,
    classify,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    is_connected,
    parse_edge_list,
    path_graph,
    prufer_decode,
    prufer_encode,
    random_tree,
    star_graph,
    tree_diameter,
)
from .identities import (
    IdentityCase,
    lemma_a1_check,
    lemma_a2_check,
    lemma_a3_check,
    verify_binomial_sum,
    verify_induction_lemma,
    verify_induction_theorem,
    verify_story,
)
from .oracle import (
    count_rooted_shellings_dp,
    count_shellings_dp,
    enumerate_shellings,
)
from .report import Report
from .trees import (
    RootedTree,
    WeightVector,
    all_root_counts,
    hook_count,
    root_tree,
    tree_count,
    weights,
)

__version__ = "0.1.0"
