from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional


@dataclass(slots=True, eq=False)
class ChainNode:
    """A key threaded into a doubly linked list."""

    key: int
    prev: Optional["ChainNode"] = field(default=None, repr=False)
    next: Optional["ChainNode"] = field(default=None, repr=False)


class Chain:
    """Doubly linked list of ChainNode objects; owns its nodes until spliced elsewhere."""

    __slots__ = ("head", "tail", "length")

    def __init__(self, head: Optional[ChainNode] = None, tail: Optional[ChainNode] = None, length: int = 0):
        self.head = head
        self.tail = tail
        self.length = length

    @classmethod
    def from_keys(cls, keys: Iterable[int]) -> "Chain":
        chain = cls()
        for key in keys:
            chain.append(ChainNode(key))
        return chain

    @classmethod
    def from_nodes(cls, head: Optional[ChainNode], tail: Optional[ChainNode], length: int) -> "Chain":
        if head is not None:
            head.prev = None
            tail.next = None
        return cls(head, tail, length)

    def append(self, node: ChainNode) -> None:
        node.next = None
        node.prev = self.tail
        if self.tail is None:
            self.head = node
        else:
            self.tail.next = node
        self.tail = node
        self.length += 1

    def detach(self) -> "Chain":
        """Hand the nodes over to a new Chain and leave this one empty."""
        taken = Chain(self.head, self.tail, self.length)
        self.head = self.tail = None
        self.length = 0
        return taken

    def nodes(self) -> Iterator[ChainNode]:
        node = self.head
        while node is not None:
            yield node
            node = node.next

    def keys(self) -> List[int]:
        return [node.key for node in self.nodes()]

    def is_ascending(self) -> bool:
        node = self.head
        while node is not None and node.next is not None:
            if node.next.key < node.key:
                return False
            node = node.next
        return True

    def __iter__(self) -> Iterator[int]:
        return (node.key for node in self.nodes())

    def __len__(self) -> int:
        return self.length

    def __repr__(self) -> str:
        return f"Chain(length={self.length})"
