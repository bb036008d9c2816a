import logging
import random
import re
from pathlib import Path
from typing import List, Optional, Tuple

from .config import DISTRIBUTIONS
from .errors import DatasetError
from .models import Dataset

logger = logging.getLogger(__name__)

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

_RUNS = re.compile(r"^runs[(:=]?(\d+)\)?$")
_KEY = re.compile(r"^-?[0-9]+$")


def parse_distribution(text: str) -> Tuple[str, Optional[int]]:
    """'uniform' -> ('uniform', None); 'runs(3)' or 'runs:3' -> ('runs', 3)."""
    text = text.strip().lower()
    match = _RUNS.match(text)
    if match:
        length = int(match.group(1))
        if length < 1:
            raise DatasetError(f"run length must be positive in {text!r}")
        return "runs", length
    if text not in DISTRIBUTIONS or text == "runs":
        raise DatasetError(f"unknown distribution {text!r}; expected uniform, sorted, reversed or runs(r)")
    return text, None


def generate(n: int, seed: int, dist: str) -> Dataset:
    if n < 0:
        raise DatasetError(f"n must be non-negative, got {n}")
    name, run_length = parse_distribution(dist)
    rng = random.Random(seed)
    if name == "sorted":
        keys = list(range(1, n + 1))
    elif name == "reversed":
        keys = list(range(n, 0, -1))
    elif name == "uniform":
        keys = rng.sample(range(1, 4 * n + 1), n)
    else:
        keys = list(range(1, n + 1))
        rng.shuffle(keys)
        keys = [key for start in range(0, n, run_length) for key in sorted(keys[start:start + run_length])]
    return Dataset(keys=keys, origin="generated", seed=seed, distribution=dist)


def load(path: str) -> Dataset:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise DatasetError(f"cannot read dataset: {e.strerror or e}", path=path)
    keys: List[int] = []
    for number, raw in enumerate(data.split(b"\n"), start=1):
        try:
            line = raw.decode("utf-8").strip()
        except UnicodeDecodeError:
            raise DatasetError("line is not valid UTF-8", path=path, line=number)
        if not line:
            continue
        if not _KEY.match(line):
            raise DatasetError(f"not a decimal integer: {line!r}", path=path, line=number)
        key = int(line)
        if not INT64_MIN <= key <= INT64_MAX:
            raise DatasetError(f"key {key} outside signed 64-bit range", path=path, line=number)
        keys.append(key)
    logger.debug("loaded %d keys from %s", len(keys), path)
    return Dataset(keys=keys, origin="file", path=path)


def save(dataset: Dataset, path: str) -> None:
    try:
        Path(path).write_text("".join(f"{key}\n" for key in dataset.keys), encoding="utf-8")
    except OSError as e:
        raise DatasetError(f"cannot write dataset: {e.strerror or e}", path=path)
