from ..config import CBST_BENCH_SEED
from ..dataset import generate, save


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="Write a reproducible key dataset")
    parser.add_argument("--n", type=int, required=True, help="Number of keys")
    parser.add_argument("--seed", type=int, default=CBST_BENCH_SEED)
    parser.add_argument("--dist", default="uniform", help="uniform | sorted | reversed | runs(r)")
    parser.add_argument("--out", required=True, help="Output path")
    parser.set_defaults(func=run)


def run(args) -> int:
    dataset = generate(args.n, args.seed, args.dist)
    save(dataset, args.out)
    print(f"wrote {len(dataset.keys)} keys ({args.dist}, seed {args.seed}) to {args.out}")
    return 0
