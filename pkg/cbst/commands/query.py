import sys

from ..batch import batch_engine
from ..config import CBST_DEFAULT_MODE, QUERY_MODES, TREE_MODES
from ..dataset import load
from .common import format_report, load_tree, sorted_keys


def register(subparsers) -> None:
    parser = subparsers.add_parser("query", help="Run membership queries against a tree")
    parser.add_argument("--in", dest="input", required=True, help="Dataset path for the tree")
    parser.add_argument("--queries", required=True, help="Dataset path for the query keys")
    parser.add_argument("--mode", choices=QUERY_MODES, default="batch")
    parser.add_argument("--tree-mode", choices=TREE_MODES, default=CBST_DEFAULT_MODE)
    parser.add_argument("--validate", action="store_true", help="Exit 1 if the tree fails validation")
    parser.set_defaults(func=run)


def run(args) -> int:
    tree, _ = load_tree(args.input, args.tree_mode)
    queries = load(args.queries).keys
    if args.mode == "traditional":
        report = batch_engine.traditional_query(tree, queries)
        sort_cost = 0
    else:
        queries, sort_cost = sorted_keys(queries)
        if args.mode == "batch":
            report = batch_engine.batch_query(tree, queries)
        else:
            report = batch_engine.range_locked_batch(tree, queries)
    print(f"{report.summary()} sort_comparisons={sort_cost}")

    if args.validate:
        validation = tree.validate()
        if not validation.ok:
            for line in format_report(validation):
                print(line, file=sys.stderr)
            return 1
    return 0
