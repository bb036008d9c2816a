import argparse
import logging
import sys
from typing import List, Optional

from .commands import bench, build, gen, query, sort, validate
from .config import CBST_LOG_LEVEL
from .errors import CbstError

COMMANDS = (gen, build, sort, query, bench, validate)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cbst", description="Compound binary search tree builder, sorter and query benchmark"
    )
    parser.add_argument("--log-level", default=CBST_LOG_LEVEL, help="Logging level (default from CBST_LOG_LEVEL)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except CbstError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        return 130
