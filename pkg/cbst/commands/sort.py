import sys

from ..config import RUN_MODES
from ..cgsm import cgsm_sorter
from ..dataset import load, save
from ..models import Dataset


def register(subparsers) -> None:
    parser = subparsers.add_parser("sort", help="Sort a dataset with the card game sorting method")
    parser.add_argument("--in", dest="input", required=True, help="Dataset path")
    parser.add_argument("--runs", choices=RUN_MODES, default="natural")
    parser.add_argument("--out", help="Write sorted keys here instead of stdout")
    parser.set_defaults(func=run)


def run(args) -> int:
    dataset = load(args.input)
    keys, report = cgsm_sorter.sort_keys(dataset.keys, args.runs)
    if args.out:
        save(Dataset(keys=keys, origin="file", path=args.out), args.out)
    else:
        sys.stdout.write("".join(f"{key}\n" for key in keys))
    print(
        f"n={report.n} runs={report.initial_runs} rounds={report.rounds} "
        f"comparisons={report.comparisons} splices={report.splices}",
        file=sys.stderr,
    )
    return 0
