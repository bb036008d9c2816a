import csv
import logging
import random
import sys
import time
from fractions import Fraction
from typing import List

from ..batch import batch_engine, batch_predicted, boundary_params, crossover_lambda
from ..cgsm import cgsm_sorter
from ..config import CBST_BENCH_SEED, CBST_BENCH_TRIALS, CBST_DEFAULT_MODE, CSV_COLUMNS, TREE_MODES
from ..dynamics import delete
from ..errors import DatasetError
from ..models import BenchRow
from ..pyramid import build_from_sorted
from ..tree import Cbst
from .common import format_report, load_tree

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("bench", help="Sweep query counts and write counter CSV")
    parser.add_argument("--in", dest="input", required=True, help="Dataset path for the tree")
    parser.add_argument(
        "--kappa-grid",
        required=True,
        help="Comma-separated query counts; values with '.' or '/' are fractions of n",
    )
    parser.add_argument("--csv", required=True, help="Output CSV path")
    parser.add_argument("--seed", type=int, default=CBST_BENCH_SEED)
    parser.add_argument("--trials", type=int, default=CBST_BENCH_TRIALS)
    parser.add_argument("--tree-mode", choices=TREE_MODES, default=CBST_DEFAULT_MODE)
    parser.add_argument("--validate", action="store_true", help="Exit 1 if the tree fails validation")
    parser.set_defaults(func=run)


def parse_grid(text: str, n: int) -> List[int]:
    grid = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            if "/" in item or "." in item:
                value = Fraction(item) * n
                kappa = max(1, round(value))
            else:
                kappa = int(item)
        except (ValueError, ZeroDivisionError):
            raise DatasetError(f"bad kappa grid entry {item!r}")
        if kappa < 1:
            raise DatasetError(f"kappa grid entries must be positive, got {item!r}")
        grid.append(kappa)
    if not grid:
        raise DatasetError("empty kappa grid")
    return grid


def _timed(fn, *args):
    start = time.perf_counter_ns()
    result = fn(*args)
    return result, time.perf_counter_ns() - start


def bench_rows(tree: Cbst, keys: List[int], kappa: int, rng: random.Random) -> List[BenchRow]:
    n = tree.size
    depth = tree.max_depth() or 0
    low, high = (keys[0], keys[-1] + 1) if keys else (0, 1)
    queries = [rng.randint(low, high) for _ in range(kappa)]
    rows = []

    (ordered, sort_report), nanos = _timed(cgsm_sorter.sort_keys, queries, "natural")
    rows.append(BenchRow(mode="sort", n=n, kappa=kappa, comparisons=sort_report.comparisons, wall_nanos=nanos, depth=depth))

    for mode, fn, args in (
        ("batch", batch_engine.batch_query, ordered),
        ("locked", batch_engine.range_locked_batch, ordered),
        ("traditional", batch_engine.traditional_query, queries),
    ):
        report, nanos = _timed(fn, tree, args)
        rows.append(
            BenchRow(
                mode=mode,
                n=n,
                kappa=kappa,
                comparisons=report.comparisons,
                nodes_visited=report.nodes_visited,
                wall_nanos=nanos,
                depth=depth,
            )
        )

    plain = build_from_sorted(keys, "plain")
    victims = rng.sample(keys, min(kappa, n))
    relinks = 0
    start = time.perf_counter_ns()
    for key in victims:
        relinks += delete(plain, key).relinks
    nanos = time.perf_counter_ns() - start
    rows.append(
        BenchRow(
            mode="delete",
            n=n,
            kappa=len(victims),
            comparisons=plain.stats.comparisons,
            relinks=relinks,
            nodes_visited=plain.stats.nodes_visited,
            wall_nanos=nanos,
            depth=depth,
        )
    )
    return rows


def run(args) -> int:
    tree, _ = load_tree(args.input, args.tree_mode)
    if args.validate:
        validation = tree.validate()
        if not validation.ok:
            for line in format_report(validation):
                print(line, file=sys.stderr)
            return 1

    keys = tree.in_order()
    n = len(keys)
    grid = parse_grid(args.kappa_grid, n)
    rng = random.Random(args.seed)
    depth = tree.max_depth()

    if n >= 2:
        print(f"n={n} depth={depth} crossover_lambda={crossover_lambda(n)} (kappa={n / crossover_lambda(n).denominator:.1f})")

    with open(args.csv, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=list(CSV_COLUMNS))
        writer.writeheader()
        for kappa in grid:
            measured = {}
            for _ in range(args.trials):
                for row in bench_rows(tree, keys, kappa, rng):
                    writer.writerow(row.model_dump())
                    measured[row.mode] = row.comparisons
            if n >= 2 and kappa <= n:
                params = boundary_params(n, kappa)
                theta = "none" if params.theta is None else f"{params.theta:.4f}"
                cheaper = "batch" if measured["batch"] < measured["traditional"] else "traditional"
                print(
                    f"kappa={kappa} lambda={float(params.lambda_):.4f} hbar={params.hbar:.3f} theta={theta} "
                    f"predicted={'batch' if batch_predicted(params) else 'traditional'} measured={cheaper}"
                )
            logger.debug("bench kappa=%d done", kappa)
    print(f"wrote {args.csv}")
    return 0
