"""Card game sorting method: merge sort over doubly linked chains.

The merger walks a forward-only cursor along X and slots each Y element in
front of the first X element that is larger, the way a card is slotted into
a hand. Once the cursor reaches the end of X the rest of Y is spliced on in
one step.
"""
import logging
from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple

from .chain import Chain, ChainNode
from .config import CBST_DEBUG_CHECKS
from .errors import ContractViolation
from .models import SortReport

logger = logging.getLogger(__name__)

RunMode = Literal["natural", "singleton"]


@dataclass
class SortCounters:
    comparisons: int = 0
    splices: int = 0
    merges: int = 0
    rounds: int = 0
    initial_runs: int = 0


@dataclass
class RunTable:
    """Heads of sorted chains, in input order."""

    runs: List[Chain]

    @property
    def kappa(self) -> int:
        return len(self.runs)

    def heads(self) -> List[Optional[ChainNode]]:
        return [run.head for run in self.runs]


class CardGameSorter:
    def __init__(self, debug_checks: bool = CBST_DEBUG_CHECKS):
        self.debug_checks = debug_checks

    def merger(self, x: Chain, y: Chain, counters: Optional[SortCounters] = None) -> Chain:
        """Merge two ascending chains; both inputs are consumed."""
        counters = counters if counters is not None else SortCounters()
        if self.debug_checks and not (x.is_ascending() and y.is_ascending()):
            raise ContractViolation("merger inputs must be ascending")
        counters.merges += 1
        xs, ys = x.detach(), y.detach()
        if ys.head is None:
            return xs
        if xs.head is None:
            return ys

        head, tail = xs.head, xs.tail
        cursor = xs.head
        incoming = ys.head
        while incoming is not None:
            counters.comparisons += 1
            if cursor.key <= incoming.key:
                if cursor.next is None:
                    # rest of Y follows the end of X
                    cursor.next = incoming
                    incoming.prev = cursor
                    tail = ys.tail
                    counters.splices += 1
                    break
                cursor = cursor.next
            else:
                following = incoming.next
                before = cursor.prev
                incoming.prev = before
                incoming.next = cursor
                cursor.prev = incoming
                if before is None:
                    head = incoming
                else:
                    before.next = incoming
                counters.splices += 1
                incoming = following
        return Chain(head, tail, xs.length + ys.length)

    def detect_runs(self, chain: Chain) -> RunTable:
        """Cut a chain into maximal non-descending runs; the chain is consumed."""
        runs: List[Chain] = []
        source = chain.detach()
        node = source.head
        while node is not None:
            start = node
            length = 1
            while node.next is not None and node.next.key >= node.key:
                node = node.next
                length += 1
            following = node.next
            runs.append(Chain.from_nodes(start, node, length))
            node = following
        return RunTable(runs)

    def singletons(self, chain: Chain) -> RunTable:
        runs: List[Chain] = []
        node = chain.detach().head
        while node is not None:
            following = node.next
            runs.append(Chain.from_nodes(node, node, 1))
            node = following
        return RunTable(runs)

    def merge_table(self, table: RunTable, counters: Optional[SortCounters] = None) -> Chain:
        """Pairwise merger rounds over a run table, carrying an odd last run."""
        counters = counters if counters is not None else SortCounters()
        runs = table.runs
        kappa = len(runs)
        if kappa == 0:
            return Chain()
        while kappa > 1:
            counters.rounds += 1
            s = pi = 0
            while s + 1 < kappa:
                runs[pi] = self.merger(runs[s], runs[s + 1], counters)
                pi += 1
                s += 2
            if s == kappa - 1:
                runs[pi] = runs[s]
                pi += 1
            kappa = pi
        merged = runs[0]
        del runs[1:]
        return merged

    def sort(self, chain: Chain, mode: RunMode = "natural", counters: Optional[SortCounters] = None) -> Chain:
        counters = counters if counters is not None else SortCounters()
        n = chain.length
        table = self.detect_runs(chain) if mode == "natural" else self.singletons(chain)
        counters.initial_runs = table.kappa
        result = self.merge_table(table, counters)
        logger.debug(
            "cgsm sort: n=%d mode=%s runs=%d rounds=%d comparisons=%d",
            n, mode, counters.initial_runs, counters.rounds, counters.comparisons,
        )
        return result

    def sort_keys(self, keys: List[int], mode: RunMode = "natural") -> Tuple[List[int], SortReport]:
        """Sort plain keys; returns the sorted keys and a SortReport."""
        counters = SortCounters()
        chain = Chain.from_keys(keys)
        n = chain.length
        result = self.sort(chain, mode, counters)
        report = SortReport(
            n=n,
            initial_runs=counters.initial_runs,
            rounds=counters.rounds,
            comparisons=counters.comparisons,
            splices=counters.splices,
        )
        return result.keys(), report


cgsm_sorter = CardGameSorter()
