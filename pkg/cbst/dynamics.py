"""Online insertion and deletion that keep the tree, the axis and the subtree
counters consistent together.

Deletion of a complete knot borrows one of its axis neighbours as the
replacement, so the structural repair is a fixed number of link writes no
matter how deep the tree is. Counter maintenance (ordinal mode only) adds one
adjustment per ancestor of the removed position.
"""
import logging
from typing import Optional

from .errors import ContractViolation, DuplicateKey, KeyNotFound
from .models import DeleteStats, NodeClass
from .tree import Cbst, Node, NodeRef, classify_node

logger = logging.getLogger(__name__)


def _write(tree: Cbst, node: Node, name: str, value: Optional[Node]) -> None:
    setattr(node, name, value)
    tree.stats.link_writes += 1


def _replace_child(tree: Cbst, parent: Optional[Node], old: Node, new: Optional[Node]) -> None:
    if parent is None:
        tree.root_node = new
    elif parent.left is old:
        _write(tree, parent, "left", new)
    else:
        _write(tree, parent, "right", new)


def _unlink_axis(tree: Cbst, node: Node) -> None:
    before, after = node.prev, node.next
    if before is None:
        tree.head_node = after
    else:
        _write(tree, before, "next", after)
    if after is None:
        tree.tail_node = before
    else:
        _write(tree, after, "prev", before)


def _shrink_path(tree: Cbst, node: Node) -> int:
    """Drop one from the counter on the side of ``node`` at every ancestor."""
    fixups = 0
    child, parent = node, node.parent
    while parent is not None:
        if parent.left is child:
            parent.lcount -= 1
        else:
            parent.rcount -= 1
        fixups += 1
        child, parent = parent, parent.parent
    tree.stats.counter_fixups += fixups
    return fixups


def _alternate(tree: Cbst, node: Node) -> Node:
    tree.stats.link_follows += 1
    after = node.next
    if classify_node(after) is not NodeClass.COMPLETE_KNOT:
        return after
    tree.stats.link_follows += 1
    return node.prev


def _transplant(tree: Cbst, target: Node, alternate: Node) -> None:
    """Lift ``alternate`` out of its position and seat it where ``target`` is."""
    from_right = alternate is target.next
    if alternate.parent is target:
        # alternate keeps its own subtree and adopts target's other side
        if from_right:
            _write(tree, alternate, "left", target.left)
            _write(tree, target.left, "parent", alternate)
        else:
            _write(tree, alternate, "right", target.right)
            _write(tree, target.right, "parent", alternate)
    else:
        # alternate has at most one child, on the side facing away from target
        orphan = alternate.right if from_right else alternate.left
        above = alternate.parent
        _replace_child(tree, above, alternate, orphan)
        if orphan is not None:
            _write(tree, orphan, "parent", above)
        _write(tree, alternate, "left", target.left)
        _write(tree, target.left, "parent", alternate)
        _write(tree, alternate, "right", target.right)
        _write(tree, target.right, "parent", alternate)
    _write(tree, alternate, "parent", target.parent)
    _replace_child(tree, target.parent, target, alternate)


def insert(tree: Cbst, key: int) -> NodeRef:
    stats = tree.stats
    parent: Optional[Node] = None
    went_left = False
    path = []
    node = tree.root_node
    while node is not None:
        stats.nodes_visited += 1
        stats.comparisons += 1
        if key == node.key:
            raise DuplicateKey(f"key {key} already present")
        parent = node
        went_left = key < node.key
        path.append((node, went_left))
        node = node.left if went_left else node.right

    if tree.ordinal:
        for ancestor, left in path:
            if left:
                ancestor.lcount += 1
            else:
                ancestor.rcount += 1
        stats.counter_fixups += len(path)

    new = tree._allocate(key)
    if parent is None:
        tree.root_node = tree.head_node = tree.tail_node = new
    elif went_left:
        # a new left child is its parent's immediate axis predecessor
        _write(tree, parent, "left", new)
        _write(tree, new, "parent", parent)
        before = parent.prev
        _write(tree, new, "prev", before)
        _write(tree, new, "next", parent)
        if before is None:
            tree.head_node = new
        else:
            _write(tree, before, "next", new)
        _write(tree, parent, "prev", new)
    else:
        _write(tree, parent, "right", new)
        _write(tree, new, "parent", parent)
        after = parent.next
        _write(tree, new, "next", after)
        _write(tree, new, "prev", parent)
        if after is None:
            tree.tail_node = new
        else:
            _write(tree, after, "prev", new)
        _write(tree, parent, "next", new)
    tree.size += 1
    return tree.ref(new)


def choose_alternate(tree: Cbst, ref: NodeRef) -> NodeRef:
    node = tree.node(ref)
    if classify_node(node) is not NodeClass.COMPLETE_KNOT:
        raise ContractViolation(f"node {node.key} is not a complete knot")
    return tree.ref(_alternate(tree, node))


def delete(tree: Cbst, key: int) -> DeleteStats:
    target = tree.find_node(key)
    if target is None:
        raise KeyNotFound(key)

    writes_before = tree.stats.link_writes
    case = classify_node(target)
    fixups = 0
    alternate_key = None

    if case is NodeClass.COMPLETE_KNOT:
        alternate = _alternate(tree, target)
        alternate_key = alternate.key
        if tree.ordinal:
            fixups = _shrink_path(tree, alternate) + 1
            tree.stats.counter_fixups += 1
        _transplant(tree, target, alternate)
        if tree.ordinal:
            alternate.lcount, alternate.rcount = target.lcount, target.rcount
    else:
        if tree.ordinal:
            fixups = _shrink_path(tree, target)
        child = target.left if target.left is not None else target.right
        _replace_child(tree, target.parent, target, child)
        if child is not None:
            _write(tree, child, "parent", target.parent)

    _unlink_axis(tree, target)
    tree._release(target)
    tree.size -= 1
    return DeleteStats(
        relinks=tree.stats.link_writes - writes_before,
        counter_fixups=fixups,
        case=case,
        alternate=alternate_key,
    )
