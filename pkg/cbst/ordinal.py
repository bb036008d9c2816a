"""Rank and select over the axis, computed by descending the tree.

Every node contributes ``flexion + step`` to a running total, where the pair
is derived from the stored subtree counters and the node's side under its
parent:

    root         flexion = +lcount, step = +1
    left child   flexion = -rcount, step = -1
    right child  flexion = +lcount, step = +1

The running total along the root path of a node is that node's 1-based axis
position.
"""
from typing import List, Optional

from .errors import KeyNotFound, ModeError, OutOfRange
from .models import FlexStep, PathStep
from .tree import Cbst, Node, NodeRef


def _require_ordinal(tree: Cbst) -> None:
    if not tree.ordinal:
        raise ModeError("ordinal queries need a tree built in ordinal mode")


def _delta(node: Node) -> int:
    parent = node.parent
    if parent is not None and parent.left is node:
        return -node.rcount - 1
    return node.lcount + 1


def flex_step(tree: Cbst, ref: NodeRef) -> FlexStep:
    _require_ordinal(tree)
    node = tree.node(ref)
    parent = node.parent
    if parent is not None and parent.left is node:
        return FlexStep(flexion=-node.rcount, step=-1)
    return FlexStep(flexion=node.lcount, step=1)


def _descend(tree: Cbst, n: int, trace: Optional[List[PathStep]] = None) -> Node:
    _require_ordinal(tree)
    if not 1 <= n <= tree.size:
        raise OutOfRange(f"ordinal {n} outside 1..{tree.size}")
    stats = tree.stats
    low, high = 1, tree.size
    total = 0
    node = tree.root_node
    while node is not None:
        stats.nodes_visited += 1
        total += _delta(node)
        if total > n:
            high = total - 1
        elif total < n:
            low = total + 1
        if trace is not None:
            trace.append(PathStep(key=node.key, total=total, low=low, high=high))
        if total == n:
            return node
        node = node.left if total > n else node.right
    # counters disagree with the shape; validate() reports which node
    raise OutOfRange(f"ordinal {n} not reached; subtree counters are inconsistent")


def select(tree: Cbst, n: int) -> NodeRef:
    return tree.ref(_descend(tree, n))


def select_path(tree: Cbst, n: int) -> List[PathStep]:
    trace: List[PathStep] = []
    _descend(tree, n, trace)
    return trace


def rank(tree: Cbst, key: int) -> int:
    _require_ordinal(tree)
    stats = tree.stats
    total = 0
    node = tree.root_node
    while node is not None:
        stats.nodes_visited += 1
        stats.comparisons += 1
        total += _delta(node)
        if key == node.key:
            return total
        node = node.left if key < node.key else node.right
    raise KeyNotFound(key)


def rank_of(tree: Cbst, ref: NodeRef) -> int:
    """Same sum as ``rank``, collected child to parent."""
    _require_ordinal(tree)
    node = tree.node(ref)
    total = 0
    while node is not None:
        total += _delta(node)
        node = node.parent
    return total
