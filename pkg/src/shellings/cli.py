"""Command-line interface.

JSON reports go to stdout (big integers as decimal strings, rationals as
"p/q"); a short human-readable summary goes to stderr.  Exit codes: 0 on
success or all checks passing, 1 when a cross-check or verification
fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import closed_forms, sweeps
from .bounds import bound_report, mid_spider
from .errors import EdgeListParseError, GuardExceeded, NotATreeError
from .graphs import (
    Graph,
    all_labeled_trees,
    classify,
    complete_bipartite_graph,
    complete_graph,
    parse_edge_list,
    path_graph,
    random_tree,
)
from .oracle import DEFAULT_MAX_DP_EDGES, count_shellings_dp
from .report import Report, format_value
from .trees import all_root_counts, tree_count

USAGE_ERROR = 2
CHECK_FAILURE = 1


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    return parse_edge_list(Path(path).read_text())


def _graph_summary(g: Graph) -> dict:
    cls = classify(g)
    summary = {
        "numVertices": g.num_vertices,
        "numEdges": g.num_edges,
        "class": cls.primary,
        "tags": list(cls.tags),
    }
    if cls.part_sizes is not None:
        summary["partSizes"] = list(cls.part_sizes)
    return summary


def _emit(report: Report) -> None:
    print(report.to_json())
    print(f"[{report.command}]", file=sys.stderr)
    for key, value in report.results.items():
        print(f"  {key:32s} {value}", file=sys.stderr)
    for check in report.cross_checks:
        line = f"  {check.status.upper():5s} {check.name}"
        if check.detail:
            line += f" ({check.detail})"
        print(line, file=sys.stderr)


def _timed(timing: dict, key: str, fn):
    start = time.perf_counter()
    value = fn()
    timing[key] = round((time.perf_counter() - start) * 1000.0, 3)
    return value


def cmd_count(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    report = Report("count", input=_graph_summary(g))
    tags = report.input["tags"]

    if "Disconnected" in tags:
        report.add_result("connectivity", 0)
        _emit(report)
        return 0

    if "Complete" in tags and g.num_vertices >= 2:
        value = _timed(report.timing, "complete_graph",
                       lambda: closed_forms.complete_graph_count(g.num_vertices))
        report.add_result("complete_graph", value)
    if "CompleteBipartite" in tags:
        m, n = report.input["partSizes"]
        value = _timed(report.timing, "complete_bipartite",
                       lambda: closed_forms.complete_bipartite_count(m, n))
        report.add_result("complete_bipartite", value)
    if "Tree" in tags:
        report.add_result("tree", _timed(report.timing, "tree", lambda: tree_count(g)))

    has_formula = bool(report.results)
    within_guard = g.num_edges <= args.max_dp_edges
    if args.brute and not within_guard:
        print(f"error: --brute requires <= {args.max_dp_edges} edges (have {g.num_edges})",
              file=sys.stderr)
        return USAGE_ERROR
    if not has_formula and not within_guard:
        print(f"error: {g.num_edges} edges exceeds DP guard {args.max_dp_edges} "
              "and no closed form applies", file=sys.stderr)
        return USAGE_ERROR
    if args.brute or not has_formula or (within_guard and not args.no_crosscheck):
        value = _timed(report.timing, "dp",
                       lambda: count_shellings_dp(g, args.max_dp_edges))
        report.add_result("dp", value)

    order = ["dp"] if args.brute else ["complete_graph", "complete_bipartite", "tree", "dp"]
    primary = next(k for k in order if k in report.results)
    for method, value in report.results.items():
        if method != primary:
            report.add_check(
                f"{method}_vs_{primary}",
                value == report.results[primary],
                f"{value} vs {report.results[primary]}",
            )
    _emit(report)
    return 0 if report.all_passed else CHECK_FAILURE


def cmd_tree_roots(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    if not g.is_tree():
        print("error: tree-roots requires a tree input", file=sys.stderr)
        return USAGE_ERROR
    report = Report("tree-roots", input=_graph_summary(g))
    roots = _timed(report.timing, "roots", lambda: all_root_counts(g))
    total = tree_count(g)
    report.add_result("total", total)
    for v, value in enumerate(roots):
        report.add_result(f"root_{v}", value)
    if g.num_vertices >= 2:
        report.add_check("half_sum_consistency", sum(roots) == 2 * total,
                         f"sum {sum(roots)} vs 2 * {total}")
    _emit(report)
    return 0 if report.all_passed else CHECK_FAILURE


def cmd_formula(args: argparse.Namespace) -> int:
    report = Report("formula", input={"family": args.family, "params": args.params})
    p = args.params
    try:
        if args.family == "kn":
            (n,) = p
            report.add_result("complete_graph",
                              _timed(report.timing, "complete_graph",
                                     lambda: closed_forms.complete_graph_count(n)))
        elif args.family == "kmn":
            m, n = p
            report.add_result("complete_bipartite",
                              _timed(report.timing, "complete_bipartite",
                                     lambda: closed_forms.complete_bipartite_count(m, n)))
        elif args.family == "stanley":
            m, n = p
            inner = _timed(report.timing, "stanley",
                           lambda: closed_forms.stanley_inner_sum(m, n, args.max_stanley_terms))
            report.add_result("stanley", closed_forms.stanley_sum_count(m, n, args.max_stanley_terms))
            report.add_result("stanley_inner_sum", inner)
        elif args.family == "path":
            (n,) = p
            report.add_result("path", _timed(report.timing, "path",
                                             lambda: closed_forms.path_count(n)))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    _emit(report)
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    if not g.is_tree() or g.num_vertices < 2:
        print("error: bounds requires a tree on at least 2 vertices", file=sys.stderr)
        return USAGE_ERROR
    report = Report("bounds", input=_graph_summary(g))
    br = _timed(report.timing, "bounds", lambda: bound_report(g))
    report.add_result("exact", br.exact)
    report.add_result("degree_lower", br.degree_lower)
    report.add_result("degree_equality_predicted", br.degree_equality_predicted)
    report.add_result("diameter", br.diameter)
    report.add_result("diameter_upper_printed", br.diameter_upper_printed)
    report.add_result("mid_spider_exact", br.mid_spider_exact)
    report.add_result("printed_vs_extremal_gap", br.printed_vs_extremal_gap)
    roots = all_root_counts(g)
    for v, coeff in enumerate(br.per_root_weight_bounds):
        report.add_result(f"weight_coeff_{v}", coeff)
    report.add_check("degree_lower_holds", br.degree_lower <= br.exact,
                     f"{br.degree_lower} <= {br.exact}")
    report.add_check("degree_equality_as_predicted",
                     (br.degree_lower == br.exact) == br.degree_equality_predicted)
    report.add_check("printed_diameter_bound_holds",
                     br.exact <= br.diameter_upper_printed,
                     f"{br.exact} <= {format_value(br.diameter_upper_printed)}")
    report.add_check("mid_spider_bound_holds", br.exact <= br.mid_spider_exact,
                     f"{br.exact} <= {br.mid_spider_exact}")
    weight_ok = all(
        br.exact <= coeff * roots[v]
        for v, coeff in enumerate(br.per_root_weight_bounds)
    )
    report.add_check("weight_bound_holds_every_root", weight_ok)
    _emit(report)
    return 0 if report.all_passed else CHECK_FAILURE


def cmd_verify(args: argparse.Namespace) -> int:
    report = Report("verify", input={"suite": args.suite, "maxN": args.max_n})
    outcomes = _timed(report.timing, args.suite,
                      lambda: sweeps.run_suite(args.suite, args.max_n))
    failures = sum(1 for o in outcomes if not o.ok)
    report.add_result("checks", len(outcomes))
    report.add_result("failures", failures)
    for o in outcomes:
        report.add_check(o.name, o.ok, o.detail)
    _emit(report)
    return 0 if failures == 0 else CHECK_FAILURE


def cmd_gen(args: argparse.Namespace) -> int:
    p = args.params
    try:
        if args.kind == "tree":
            (n,) = p
            sys.stdout.write(random_tree(n, args.seed).to_edge_list_text())
        elif args.kind == "all-trees":
            (n,) = p
            total = n ** (n - 2) if n >= 2 else 1
            for i, g in enumerate(all_labeled_trees(n)):
                sys.stdout.write(f"# tree {i + 1}/{total}\n")
                sys.stdout.write(g.to_edge_list_text())
                sys.stdout.write("\n")
        elif args.kind == "kmn":
            m, n = p
            sys.stdout.write(complete_bipartite_graph(m, n).to_edge_list_text())
        elif args.kind == "kn":
            (n,) = p
            sys.stdout.write(complete_graph(n).to_edge_list_text())
        elif args.kind == "path":
            (n,) = p
            sys.stdout.write(path_graph(n).to_edge_list_text())
        elif args.kind == "mid-spider":
            n, ell = p
            sys.stdout.write(mid_spider(n, ell).to_edge_list_text())
    except (ValueError, GuardExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shellings",
        description="Count shellings of graphs exactly (orderings of the "
                    "edge set in which every prefix is connected).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count shellings of an edge-list file")
    p_count.add_argument("file", help="edge-list path, or - for stdin")
    p_count.add_argument("--brute", action="store_true",
                         help="use the subset DP as the primary method")
    p_count.add_argument("--no-crosscheck", action="store_true",
                         help="skip the DP cross-check of formula results")
    p_count.add_argument("--max-dp-edges", type=int, default=DEFAULT_MAX_DP_EDGES,
                         help="edge guard for the subset DP (default %(default)s)")
    p_count.set_defaults(func=cmd_count)

    p_roots = sub.add_parser("tree-roots", help="per-root shelling counts of a tree")
    p_roots.add_argument("file", help="edge-list path, or - for stdin")
    p_roots.set_defaults(func=cmd_tree_roots)

    p_formula = sub.add_parser("formula", help="evaluate a closed-form count")
    p_formula.add_argument("family", choices=["kn", "kmn", "stanley", "path"])
    p_formula.add_argument("params", type=int, nargs="+")
    p_formula.add_argument("--max-stanley-terms", type=int,
                           default=closed_forms.DEFAULT_MAX_STANLEY_TERMS)
    p_formula.set_defaults(func=cmd_formula)

    p_bounds = sub.add_parser("bounds", help="bound report for a tree")
    p_bounds.add_argument("file", help="edge-list path, or - for stdin")
    p_bounds.set_defaults(func=cmd_bounds)

    p_verify = sub.add_parser("verify", help="run a verification sweep")
    p_verify.add_argument("suite", choices=list(sweeps.SUITES))
    p_verify.add_argument("--max-n", type=int, default=None,
                          help="sweep size (defaults: trees 7, bounds 8)")
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="emit an edge-list file")
    p_gen.add_argument("kind", choices=["tree", "all-trees", "kmn", "kn", "path", "mid-spider"])
    p_gen.add_argument("params", type=int, nargs="+")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    n_params = {"kn": 1, "kmn": 2, "stanley": 2, "path": 1,
                "tree": 1, "all-trees": 1, "mid-spider": 2}
    expected = n_params.get(getattr(args, "family", None) or getattr(args, "kind", None))
    if expected is not None and len(args.params) != expected:
        parser.error(f"expected {expected} parameter(s)")
    try:
        return args.func(args)
    except EdgeListParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (GuardExceeded, NotATreeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
