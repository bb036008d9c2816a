import sys

from ..config import CBST_DEFAULT_MODE, TREE_MODES
from .common import format_report, load_tree, verdict


def register(subparsers) -> None:
    parser = subparsers.add_parser("build", help="Sort a dataset and bulk-build a tree from it")
    parser.add_argument("--in", dest="input", required=True, help="Dataset path")
    parser.add_argument("--mode", choices=TREE_MODES, default=CBST_DEFAULT_MODE)
    parser.add_argument("--validate", action="store_true", help="Exit 1 if the tree fails validation")
    parser.set_defaults(func=run)


def run(args) -> int:
    tree, _ = load_tree(args.input, args.mode)
    report = tree.validate()
    depth = tree.max_depth()
    print(f"depth={'none' if depth is None else depth} valid={verdict(report.ok)}")
    if args.validate and not report.ok:
        for line in format_report(report):
            print(line, file=sys.stderr)
        return 1
    return 0
