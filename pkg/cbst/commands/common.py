from typing import List, Tuple

from ..cgsm import cgsm_sorter
from ..dataset import load
from ..models import Dataset, TreeMode, ValidationReport
from ..pyramid import build_from_sorted
from ..tree import Cbst


def sorted_keys(keys: List[int]) -> Tuple[List[int], int]:
    """CGSM-sort keys; returns the keys and the comparisons spent."""
    ordered, report = cgsm_sorter.sort_keys(keys, "natural")
    return ordered, report.comparisons


def load_tree(path: str, mode: TreeMode) -> Tuple[Cbst, Dataset]:
    dataset = load(path)
    keys, _ = sorted_keys(dataset.keys)
    return build_from_sorted(keys, mode), dataset


def format_report(report: ValidationReport) -> List[str]:
    lines = []
    for name, value in report.model_dump(exclude={"messages"}).items():
        lines.append(f"{name}={'pass' if value else 'fail'}")
    lines.extend(f"  {message}" for message in report.messages)
    return lines


def verdict(flag: bool) -> str:
    return "true" if flag else "false"
