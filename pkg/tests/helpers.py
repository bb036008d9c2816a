import random
from typing import List, Set, Tuple

from cbst import build_from_sorted, insert
from cbst.tree import Cbst


def random_tree(rng: random.Random, size: int, mode: str = "ordinal", key_space: int = 0) -> Tuple[Cbst, Set[int]]:
    keys = rng.sample(range(key_space or max(4 * size, 1)), size)
    tree = Cbst(mode)
    for key in keys:
        insert(tree, key)
    return tree, set(keys)


def pyramid(n: int, mode: str = "ordinal") -> Cbst:
    return build_from_sorted(range(1, n + 1), mode)


def keys_by_parent(tree: Cbst) -> List[Tuple[int, object]]:
    """(key, parent key) for every node, in axis order."""
    return [(node.key, node.parent.key if node.parent else None) for node in tree.axis_nodes()]
