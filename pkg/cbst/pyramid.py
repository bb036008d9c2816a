"""Bottom-up bulk build of a compound tree from sorted keys.

Positions are 1-based axis positions. A position whose largest power-of-two
divisor is 2**j becomes a parent in round j and picks its children at
distance 2**(j-1) on either side. When the right child would fall past n,
the right child is the position of largest power-of-two divisor among those
that remain between the parent and n. The position with the largest
power-of-two divisor crowns the pyramid, and the depth is floor(log2 n).
"""
import logging
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .chain import Chain
from .config import CBST_DEFAULT_MODE
from .errors import DomainError, DuplicateKey, NotSorted
from .models import SkeletonPlan, TreeMode
from .tree import Cbst, Node

logger = logging.getLogger(__name__)

Link = Tuple[int, int, int, Optional[int]]


def _apex(n: int) -> int:
    return 1 << (n.bit_length() - 1)


def _round_links(n: int) -> Iterator[Link]:
    """Yield (round, parent, left, right) positions, lowest round first."""
    for j in range(1, n.bit_length()):
        width = 1 << (j - 1)
        reach_cap = (1 << j) - 1
        for parent in range(1 << j, n + 1, 1 << (j + 1)):
            reach = min(n, parent + reach_cap) - parent
            right = parent + (1 << (reach.bit_length() - 1)) if reach > 0 else None
            yield j, parent, parent - width, right


def pyramid_rounds(n: int) -> Iterator[Tuple[int, int, int]]:
    """Cursor/offset/width loop over a perfect size n = 2**k - 1.

    Yields (parent, left, right) positions in the order the rounds pick them.
    """
    if n < 0 or (n + 1) & n:
        raise DomainError(f"round-based pyramid needs n = 2**k - 1, got {n}")
    cursor = backup = 2
    offset = 4
    width = 1
    while cursor < n:
        yield cursor, cursor - width, cursor + width
        cursor += offset
        if cursor > n:
            width = backup
            backup = cursor = offset
            offset *= 2


class PyramidBuilder:
    def plan_skeleton(self, n: int) -> SkeletonPlan:
        if n < 0:
            raise DomainError(f"element count must be non-negative, got {n}")
        if n == 0:
            return SkeletonPlan(n=0)
        parent: List[Optional[int]] = [None] * n
        side: List[Optional[str]] = [None] * n
        left: List[Optional[int]] = [None] * n
        right: List[Optional[int]] = [None] * n
        links = list(_round_links(n))
        for _, p, lchild, rchild in links:
            left[p - 1] = lchild
            parent[lchild - 1] = p
            side[lchild - 1] = "left"
            if rchild is not None:
                right[p - 1] = rchild
                parent[rchild - 1] = p
                side[rchild - 1] = "right"

        root = _apex(n)
        depth = [0] * n
        for _, p, lchild, rchild in reversed(links):
            depth[lchild - 1] = depth[p - 1] + 1
            if rchild is not None:
                depth[rchild - 1] = depth[p - 1] + 1
        return SkeletonPlan(
            n=n, root=root, parent=parent, side=side, left=left, right=right, depth=max(depth)
        )

    def build_from_sorted(self, keys: Sequence[int], mode: TreeMode = CBST_DEFAULT_MODE) -> Cbst:
        keys = list(keys)
        for i in range(1, len(keys)):
            if keys[i - 1] == keys[i]:
                raise DuplicateKey(f"key {keys[i]} repeated at position {i + 1}")
            if keys[i - 1] > keys[i]:
                raise NotSorted(f"key {keys[i]} at position {i + 1} follows larger key {keys[i - 1]}")
        tree = Cbst(mode)
        nodes = [tree._allocate(key) for key in keys]
        self._wire(tree, nodes)
        return tree

    def build_from_chain(self, chain: Chain, mode: TreeMode = CBST_DEFAULT_MODE) -> Cbst:
        """Build by re-wiring the chain's own nodes; the chain is left empty."""
        tree = Cbst(mode)
        nodes: List[Node] = []
        previous = None
        for node in chain.detach().nodes():
            if previous is not None:
                if previous.key == node.key:
                    raise DuplicateKey(f"key {node.key} repeated")
                if previous.key > node.key:
                    raise NotSorted(f"key {node.key} follows larger key {previous.key}")
            node.parent = node.left = node.right = None
            node.lcount = node.rcount = 0
            tree._adopt(node)
            nodes.append(node)
            previous = node
        self._wire(tree, nodes)
        return tree

    def _wire(self, tree: Cbst, nodes: List[Node]) -> None:
        n = len(nodes)
        writes = 0
        for i, node in enumerate(nodes):
            node.prev = nodes[i - 1] if i else None
            node.next = nodes[i + 1] if i + 1 < n else None
            writes += 2

        ordinal = tree.ordinal
        for _, p, lchild, rchild in _round_links(n):
            top = nodes[p - 1]
            below = nodes[lchild - 1]
            top.left = below
            below.parent = top
            writes += 2
            if ordinal:
                top.lcount = below.lcount + below.rcount + 1
            if rchild is not None:
                below = nodes[rchild - 1]
                top.right = below
                below.parent = top
                writes += 2
                if ordinal:
                    top.rcount = below.lcount + below.rcount + 1

        tree.stats.link_writes += writes
        if n:
            tree.root_node = nodes[_apex(n) - 1]
            tree.head_node = nodes[0]
            tree.tail_node = nodes[-1]
        tree.size = n
        logger.debug("pyramid built: n=%d depth=%s link_writes=%d", n, n.bit_length() - 1 if n else None, writes)

    def no_foul_check(self, tree: Cbst) -> bool:
        """True when no subtree extremum crosses the key of the node above it."""
        if tree.root_node is None:
            return True
        preorder: List[Node] = []
        seen = set()
        stack = [tree.root_node]
        while stack:
            node = stack.pop()
            if id(node) in seen:
                return False
            seen.add(id(node))
            preorder.append(node)
            stack.extend(child for child in (node.left, node.right) if child is not None)

        lowest, highest = {}, {}
        for node in reversed(preorder):
            lo = hi = node.key
            if node.left is not None:
                if highest[id(node.left)] >= node.key:
                    return False
                lo = lowest[id(node.left)]
            if node.right is not None:
                if lowest[id(node.right)] <= node.key:
                    return False
                hi = highest[id(node.right)]
            lowest[id(node)] = lo
            highest[id(node)] = hi
        return True


pyramid_builder = PyramidBuilder()


def build_from_sorted(keys: Iterable[int], mode: TreeMode = CBST_DEFAULT_MODE) -> Cbst:
    return pyramid_builder.build_from_sorted(list(keys), mode)


def plan_skeleton(n: int) -> SkeletonPlan:
    return pyramid_builder.plan_skeleton(n)


def no_foul_check(tree: Cbst) -> bool:
    return pyramid_builder.no_foul_check(tree)
