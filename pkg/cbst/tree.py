"""Compound binary search tree: a BST whose nodes are also threaded, in key
order, into a doubly linked axis.

Nodes live in an arena owned by the tree and are handed out as ``NodeRef``
handles. A handle carries the slot generation, so a handle to a deleted node
is detected instead of silently aliasing whichever node reuses the slot.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Optional

from .chain import ChainNode
from .config import CBST_DEFAULT_MODE, TREE_MODES
from .errors import ConfigError, StaleNodeRef
from .models import NodeClass, TreeMode, ValidationReport

logger = logging.getLogger(__name__)

_tree_ids = itertools.count(1)


@dataclass(slots=True, eq=False)
class Node(ChainNode):
    parent: Optional["Node"] = field(default=None, repr=False)
    left: Optional["Node"] = field(default=None, repr=False)
    right: Optional["Node"] = field(default=None, repr=False)
    lcount: int = 0
    rcount: int = 0
    slot: int = -1
    generation: int = 0


class NodeRef(NamedTuple):
    tree_id: int
    slot: int
    generation: int


@dataclass
class TreeStats:
    comparisons: int = 0
    nodes_visited: int = 0
    link_follows: int = 0
    link_writes: int = 0
    counter_fixups: int = 0

    def reset(self) -> None:
        self.comparisons = 0
        self.nodes_visited = 0
        self.link_follows = 0
        self.link_writes = 0
        self.counter_fixups = 0

    def snapshot(self) -> Dict[str, int]:
        return {
            "comparisons": self.comparisons,
            "nodes_visited": self.nodes_visited,
            "link_follows": self.link_follows,
            "link_writes": self.link_writes,
            "counter_fixups": self.counter_fixups,
        }


def classify_node(node: Node) -> NodeClass:
    children = (node.left is not None) + (node.right is not None)
    if children == 2:
        return NodeClass.COMPLETE_KNOT
    if children == 1:
        return NodeClass.PARTIAL_KNOT
    return NodeClass.TERMINAL


class Cbst:
    def __init__(self, mode: TreeMode = CBST_DEFAULT_MODE):
        if mode not in TREE_MODES:
            raise ConfigError(f"unknown tree mode {mode!r}; expected one of {TREE_MODES}")
        self.mode: TreeMode = mode
        self.tree_id = next(_tree_ids)
        self.root_node: Optional[Node] = None
        self.head_node: Optional[Node] = None
        self.tail_node: Optional[Node] = None
        self.size = 0
        self.stats = TreeStats()
        self._slots: List[Optional[Node]] = []
        self._generations: List[int] = []
        self._free: List[int] = []

    @classmethod
    def new_empty(cls, mode: TreeMode = CBST_DEFAULT_MODE) -> "Cbst":
        return cls(mode)

    @property
    def ordinal(self) -> bool:
        return self.mode == "ordinal"

    # arena

    def _allocate(self, key: int) -> Node:
        node = Node(key)
        self._adopt(node)
        return node

    def _adopt(self, node: Node) -> None:
        if self._free:
            slot = self._free.pop()
            self._slots[slot] = node
        else:
            slot = len(self._slots)
            self._slots.append(node)
            self._generations.append(0)
        node.slot = slot
        node.generation = self._generations[slot]

    def _release(self, node: Node) -> None:
        slot = node.slot
        self._slots[slot] = None
        self._generations[slot] += 1
        self._free.append(slot)
        node.parent = node.left = node.right = None
        node.prev = node.next = None
        node.slot = -1

    def _clear(self) -> None:
        """Forget every node; used when another tree takes ownership of them."""
        self.root_node = self.head_node = self.tail_node = None
        self.size = 0
        self._slots.clear()
        self._generations.clear()
        self._free.clear()

    def ref(self, node: Optional[Node]) -> Optional[NodeRef]:
        if node is None:
            return None
        return NodeRef(self.tree_id, node.slot, node.generation)

    def node(self, ref: NodeRef) -> Node:
        if ref.tree_id != self.tree_id:
            raise StaleNodeRef(f"handle {ref} belongs to another tree")
        if not 0 <= ref.slot < len(self._slots):
            raise StaleNodeRef(f"handle {ref} names no slot")
        node = self._slots[ref.slot]
        if node is None or node.generation != ref.generation:
            raise StaleNodeRef(f"handle {ref} names a deleted node")
        return node

    def key(self, ref: NodeRef) -> int:
        return self.node(ref).key

    # handles

    @property
    def root(self) -> Optional[NodeRef]:
        return self.ref(self.root_node)

    @property
    def head(self) -> Optional[NodeRef]:
        return self.ref(self.head_node)

    @property
    def tail(self) -> Optional[NodeRef]:
        return self.ref(self.tail_node)

    def first(self) -> Optional[NodeRef]:
        return self.head

    def last(self) -> Optional[NodeRef]:
        return self.tail

    # navigation

    def find_node(self, key: int) -> Optional[Node]:
        stats = self.stats
        node = self.root_node
        while node is not None:
            stats.nodes_visited += 1
            stats.comparisons += 1
            if key == node.key:
                return node
            node = node.left if key < node.key else node.right
        return None

    def search(self, key: int) -> Optional[NodeRef]:
        return self.ref(self.find_node(key))

    def successor(self, ref: NodeRef) -> Optional[NodeRef]:
        node = self.node(ref)
        self.stats.link_follows += 1
        return self.ref(node.next)

    def predecessor(self, ref: NodeRef) -> Optional[NodeRef]:
        node = self.node(ref)
        self.stats.link_follows += 1
        return self.ref(node.prev)

    def classify(self, ref: NodeRef) -> NodeClass:
        return classify_node(self.node(ref))

    def depth_of(self, ref: NodeRef) -> int:
        node = self.node(ref)
        depth = 0
        while node.parent is not None:
            node = node.parent
            depth += 1
        return depth

    def max_depth(self) -> Optional[int]:
        if self.root_node is None:
            return None
        deepest = 0
        level = [self.root_node]
        depth = 0
        while level:
            deepest = depth
            level = [child for node in level for child in (node.left, node.right) if child is not None]
            depth += 1
        return deepest

    def axis_nodes(self) -> Iterator[Node]:
        node = self.head_node
        while node is not None:
            yield node
            node = node.next

    def in_order(self) -> List[int]:
        return [node.key for node in self.axis_nodes()]

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return (node.key for node in self.axis_nodes())

    def __contains__(self, key: int) -> bool:
        node = self.root_node
        while node is not None:
            if key == node.key:
                return True
            node = node.left if key < node.key else node.right
        return False

    def __repr__(self) -> str:
        return f"Cbst(mode={self.mode!r}, size={self.size})"

    # validation

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        messages = report.messages

        # tree side: preorder walk with a guard against cycles and shared children
        depth: Dict[int, int] = {}
        preorder: List[Node] = []
        shared = False
        if self.root_node is not None:
            if self.root_node.parent is not None:
                report.bst_order = False
                messages.append("root has a parent link")
            stack = [(self.root_node, 0)]
            while stack:
                node, d = stack.pop()
                if id(node) in depth:
                    shared = True
                    report.bst_order = False
                    messages.append(f"node {node.key} reached twice in the tree")
                    continue
                depth[id(node)] = d
                preorder.append(node)
                for child in (node.right, node.left):
                    if child is None:
                        continue
                    if child.parent is not node:
                        report.bst_order = False
                        messages.append(f"node {child.key} does not point back to parent {node.key}")
                    stack.append((child, d + 1))

        inorder: List[Node] = []
        if not shared:
            inorder = self._inorder_nodes(len(preorder))
            for a, b in zip(inorder, inorder[1:]):
                if not a.key < b.key:
                    report.bst_order = False
                    messages.append(f"in-order keys {a.key}, {b.key} out of order")
                    break

        # subtree sizes bottom-up from the reversed preorder
        if self.ordinal:
            sizes: Dict[int, int] = {}
            for node in reversed(preorder):
                lsize = sizes.get(id(node.left), 0) if node.left is not None else 0
                rsize = sizes.get(id(node.right), 0) if node.right is not None else 0
                sizes[id(node)] = lsize + rsize + 1
                if node.lcount != lsize or node.rcount != rsize:
                    report.counters_consistent = False
                    messages.append(
                        f"node {node.key} counters ({node.lcount}, {node.rcount}) != recount ({lsize}, {rsize})"
                    )

        # axis side
        axis: List[Node] = []
        seen = set()
        node = self.head_node
        if node is not None and node.prev is not None:
            report.axis_ascending = False
            messages.append("axis head has a prev link")
        while node is not None:
            if id(node) in seen:
                report.axis_ascending = False
                messages.append(f"axis revisits node {node.key}")
                break
            seen.add(id(node))
            axis.append(node)
            if node.next is not None and node.next.prev is not node:
                report.axis_ascending = False
                messages.append(f"axis node {node.next.key} prev link does not point to {node.key}")
            node = node.next
        for a, b in zip(axis, axis[1:]):
            if not a.key < b.key:
                report.axis_ascending = False
                messages.append(f"axis keys {a.key}, {b.key} not ascending")
                break

        if len(axis) != len(inorder) or any(a is not b for a, b in zip(axis, inorder)):
            report.axis_matches_inorder = False
            messages.append("axis sequence differs from in-order traversal")

        # adjacency corollaries over axis neighbours
        for a, b in zip(axis, axis[1:]):
            da, db = depth.get(id(a)), depth.get(id(b))
            if da is None or db is None:
                report.adjacent_depths_differ = False
                report.adjacent_ancestry = False
                messages.append(f"axis node {(a if da is None else b).key} is not in the tree")
                continue
            if da == db:
                report.adjacent_depths_differ = False
                messages.append(f"axis neighbours {a.key}, {b.key} share depth {da}")
                continue
            shallow, deep, gap = (a, b, db - da) if da < db else (b, a, da - db)
            for _ in range(gap):
                if deep is None:
                    break
                deep = deep.parent
            if deep is not shallow:
                report.adjacent_ancestry = False
                messages.append(f"neither of axis neighbours {a.key}, {b.key} is the other's ancestor")
            ca, cb = classify_node(a), classify_node(b)
            if ca == cb and ca != NodeClass.PARTIAL_KNOT:
                report.adjacent_classes_differ = False
                messages.append(f"axis neighbours {a.key}, {b.key} are both {ca.value}")

        live = sum(1 for slot in self._slots if slot is not None)
        if not (self.size == len(preorder) == len(axis) == live):
            report.size_consistent = False
            messages.append(
                f"size {self.size}, tree nodes {len(preorder)}, axis length {len(axis)}, live slots {live}"
            )
        if inorder and (self.head_node is not inorder[0] or self.tail_node is not inorder[-1]):
            report.size_consistent = False
            messages.append("head/tail do not hold the minimum/maximum")
        if self.root_node is None and (self.head_node is not None or self.tail_node is not None):
            report.size_consistent = False
            messages.append("empty tree with dangling head/tail")
        if axis and axis[-1] is not self.tail_node:
            report.size_consistent = False
            messages.append("axis walk does not end at tail")

        if not report.ok:
            logger.debug("validation failed: %s", report.failed_checks())
        return report

    def _inorder_nodes(self, limit: int) -> List[Node]:
        out: List[Node] = []
        stack: List[Node] = []
        node = self.root_node
        while (stack or node is not None) and len(out) <= limit:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            out.append(node)
            node = node.right
        return out
