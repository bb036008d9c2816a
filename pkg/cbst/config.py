import os
from dotenv import load_dotenv

load_dotenv()

CBST_DEFAULT_MODE = os.getenv("CBST_DEFAULT_MODE", "ordinal")
CBST_DEBUG_CHECKS = os.getenv("CBST_DEBUG_CHECKS", "0").lower() not in ("0", "false", "no", "")
CBST_LOG_LEVEL = os.getenv("CBST_LOG_LEVEL", "WARNING")
CBST_BENCH_SEED = int(os.getenv("CBST_BENCH_SEED", "20240917"))
CBST_BENCH_TRIALS = int(os.getenv("CBST_BENCH_TRIALS", "1"))

TREE_MODES = ("plain", "ordinal")
QUERY_MODES = ("batch", "traditional", "locked")
RUN_MODES = ("natural", "singleton")
DISTRIBUTIONS = ("uniform", "sorted", "reversed", "runs")

CSV_COLUMNS = (
    "mode",
    "n",
    "kappa",
    "comparisons",
    "relinks",
    "nodes_visited",
    "wall_nanos",
    "depth",
)
