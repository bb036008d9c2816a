from ..config import CBST_DEFAULT_MODE, TREE_MODES
from ..pyramid import no_foul_check
from .common import format_report, load_tree, verdict


def register(subparsers) -> None:
    parser = subparsers.add_parser("validate", help="Build a tree and check every structural invariant")
    parser.add_argument("--in", dest="input", required=True, help="Dataset path")
    parser.add_argument("--mode", choices=TREE_MODES, default=CBST_DEFAULT_MODE)
    parser.set_defaults(func=run)


def run(args) -> int:
    tree, _ = load_tree(args.input, args.mode)
    report = tree.validate()
    for line in format_report(report):
        print(line)
    no_foul = no_foul_check(tree)
    print(f"no_foul={verdict(no_foul)}")
    print(f"valid={verdict(report.ok and no_foul)}")
    return 0 if report.ok and no_foul else 1
