"""Batch membership queries against the axis, the per-key descent baseline,
and the thresholds that predict which of the two is cheaper.

All logarithms are base 2.
"""
import logging
import math
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from .cgsm import RunTable, SortCounters, cgsm_sorter
from .chain import Chain
from .errors import DomainError, DuplicateAcrossTrees, QueriesNotSorted
from .models import BoundaryParams, Number, Outcome, QueryReport, TreeMode
from .pyramid import pyramid_builder
from .tree import Cbst, Node

logger = logging.getLogger(__name__)


def _ceil_log2(n: int) -> int:
    return (n - 1).bit_length()


def _check_lambda(lam: Number) -> float:
    value = float(lam)
    if not 0 < value <= 1:
        raise DomainError(f"lambda must lie in (0, 1], got {lam}")
    return value


def crossover_lambda(n: int) -> Fraction:
    """Query fraction above which a sorted batch beats per-key descent."""
    if n < 2:
        raise DomainError(f"crossover needs n >= 2, got {n}")
    return Fraction(1, _ceil_log2(n))


def depth_index(n: int, lam: Number) -> float:
    """Tree depth at which batching, sort included, is predicted cheaper."""
    value = _check_lambda(lam)
    if n < 2:
        raise DomainError(f"depth index needs n >= 2, got {n}")
    return 1 / value + math.log2(2 * value * n)


def theta_boundary(lam: Number) -> Optional[float]:
    """Fraction of the axis a locked range may span; None when no range helps."""
    value = _check_lambda(lam)
    theta = value * math.log2(1 / (2 * value))
    return theta if theta > 0 else None


def depth_margin(lam: Number) -> float:
    """How far the depth index sits above log2 n; positive on all of (0, 1]."""
    value = _check_lambda(lam)
    return 1 + 1 / value - math.log2(1 / value)


def boundary_params(n: int, kappa: int) -> BoundaryParams:
    if not 1 <= kappa <= n:
        raise DomainError(f"query count must lie in 1..{n}, got {kappa}")
    lam = Fraction(kappa, n)
    return BoundaryParams(
        n=n,
        kappa=kappa,
        lambda_=lam,
        crossover=crossover_lambda(n),
        hbar=depth_index(n, lam),
        theta=theta_boundary(lam),
        margin=depth_margin(lam),
    )


def batch_predicted(params: BoundaryParams, max_depth: Optional[int] = None) -> bool:
    """Sorted queries: compare lambda with the crossover. Unsorted: compare depth with hbar."""
    if max_depth is None:
        return params.lambda_ >= params.crossover
    return max_depth + 1 >= params.hbar


def _check_sorted(queries: Sequence[int]) -> None:
    for i in range(1, len(queries)):
        if queries[i] < queries[i - 1]:
            raise QueriesNotSorted(f"query {queries[i]} at position {i + 1} follows {queries[i - 1]}")


class BatchQueryEngine:
    def _co_walk(self, cursor: Optional[Node], stop: Optional[Node], queries: List[int], report: QueryReport) -> None:
        outcomes: List[Outcome] = []
        comparisons = 0
        visited = 1 if cursor is not stop else 0
        for y in queries:
            outcome: Outcome = "miss"
            while cursor is not stop:
                comparisons += 1
                if cursor.key < y:
                    cursor = cursor.next
                    if cursor is not stop:
                        visited += 1
                    continue
                if cursor.key == y:
                    outcome = "hit"
                break
            outcomes.append(outcome)
        report.outcomes = outcomes
        report.comparisons += comparisons
        report.nodes_visited += visited

    def batch_query(self, tree: Cbst, queries: Iterable[int]) -> QueryReport:
        queries = list(queries)
        _check_sorted(queries)
        report = QueryReport(mode="batch", queries=queries)
        self._co_walk(tree.head_node, None, queries, report)
        logger.debug("batch query: %s", report.summary())
        return report

    def traditional_query(self, tree: Cbst, queries: Iterable[int]) -> QueryReport:
        queries = list(queries)
        outcomes: List[Outcome] = []
        visited = 0
        for y in queries:
            outcome: Outcome = "miss"
            node = tree.root_node
            while node is not None:
                visited += 1
                if y == node.key:
                    outcome = "hit"
                    break
                node = node.left if y < node.key else node.right
            outcomes.append(outcome)
        report = QueryReport(
            mode="traditional", queries=queries, outcomes=outcomes, comparisons=visited, nodes_visited=visited
        )
        logger.debug("traditional query: %s", report.summary())
        return report

    def _bound(self, tree: Cbst, key: int, ceiling: bool, report: QueryReport) -> Optional[Node]:
        """Smallest node >= key (ceiling) or largest node <= key (floor)."""
        candidate = None
        node = tree.root_node
        while node is not None:
            report.nodes_visited += 1
            report.comparisons += 1
            if node.key == key:
                return node
            if (node.key > key) == ceiling:
                candidate = node
                node = node.left if ceiling else node.right
            else:
                node = node.right if ceiling else node.left
        return candidate

    def range_locked_batch(self, tree: Cbst, queries: Iterable[int]) -> QueryReport:
        queries = list(queries)
        _check_sorted(queries)
        report = QueryReport(mode="locked", queries=queries, locked_length=0)
        if not queries:
            return report
        low = self._bound(tree, queries[0], True, report)
        high = self._bound(tree, queries[-1], False, report)
        if low is None or high is None or low.key > high.key:
            report.outcomes = ["miss"] * len(queries)
            return report

        length = 1
        node = low
        while node is not high:
            node = node.next
            length += 1
        report.locked_length = length
        self._co_walk(low, high.next, queries, report)
        logger.debug("locked batch query: %s", report.summary())
        return report

    def merge_trees(
        self,
        trees: List[Cbst],
        mode: Optional[TreeMode] = None,
        counters: Optional[SortCounters] = None,
    ) -> Cbst:
        """Merge disjoint trees into one pyramid; the inputs are emptied."""
        if not trees:
            return Cbst(mode) if mode else Cbst()
        mode = mode or trees[0].mode
        seen = set()
        for tree in trees:
            for key in tree:
                if key in seen:
                    raise DuplicateAcrossTrees(f"key {key} appears in more than one tree")
                seen.add(key)

        chains = []
        for tree in trees:
            chains.append(Chain.from_nodes(tree.head_node, tree.tail_node, tree.size))
            tree._clear()
        counters = counters if counters is not None else SortCounters()
        merged = cgsm_sorter.merge_table(RunTable(chains), counters)
        result = pyramid_builder.build_from_chain(merged, mode)
        logger.debug(
            "merged %d trees into n=%d with %d comparisons", len(trees), result.size, counters.comparisons
        )
        return result


batch_engine = BatchQueryEngine()
