import bisect
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cbst import build_from_sorted, choose_alternate, delete, insert, rank, select
from cbst.errors import ContractViolation, DuplicateKey, KeyNotFound
from cbst.models import NodeClass
from cbst.tree import Cbst

from helpers import keys_by_parent, pyramid, random_tree


def test_insert_order_reproduces_pyramid(pyramid7):
    tree = Cbst()
    for key in (4, 2, 6, 1, 3, 5, 7):
        insert(tree, key)
    assert tree.in_order() == [1, 2, 3, 4, 5, 6, 7]
    assert keys_by_parent(tree) == keys_by_parent(pyramid7)
    assert tree.validate().ok


def test_insert_right_child_splices_after_parent():
    tree = Cbst()
    insert(tree, 1)
    two = insert(tree, 2)
    node = tree.node(two)
    assert node.parent.key == 1 and node.parent.right is node
    assert tree.in_order() == [1, 2]
    assert tree.tail == two


def test_insert_duplicate_leaves_tree_unchanged(pyramid7):
    before = keys_by_parent(pyramid7)
    counters = [(node.lcount, node.rcount) for node in pyramid7.axis_nodes()]
    with pytest.raises(DuplicateKey):
        insert(pyramid7, 6)
    assert keys_by_parent(pyramid7) == before
    assert [(node.lcount, node.rcount) for node in pyramid7.axis_nodes()] == counters
    assert pyramid7.size == 7


def test_insert_keeps_counters(pyramid7):
    insert(pyramid7, 8)
    root = pyramid7.node(pyramid7.root)
    assert (root.lcount, root.rcount) == (3, 4)
    assert pyramid7.validate().counters_consistent


def test_delete_root_complete_knot(pyramid7):
    stats = delete(pyramid7, 4)
    assert stats.case is NodeClass.COMPLETE_KNOT
    assert stats.alternate == 5
    root = pyramid7.node(pyramid7.root)
    assert root.key == 5
    assert (root.left.key, root.right.key) == (2, 6)
    assert pyramid7.in_order() == [1, 2, 3, 5, 6, 7]
    assert pyramid7.validate().ok
    assert stats.relinks <= 10


def test_reinsert_after_root_delete(pyramid7):
    delete(pyramid7, 4)
    ref = insert(pyramid7, 4)
    node = pyramid7.node(ref)
    assert node.parent.key == 3 and node.parent.right is node
    assert pyramid7.validate().ok


def test_delete_terminal_tail(pyramid7):
    stats = delete(pyramid7, 7)
    assert stats.case is NodeClass.TERMINAL
    assert stats.relinks == 2
    assert pyramid7.key(pyramid7.tail) == 6


def test_delete_partial_knot_moves_child_up():
    tree = Cbst()
    for key in (2, 1, 3, 0):
        insert(tree, key)
    stats = delete(tree, 1)
    assert stats.case is NodeClass.PARTIAL_KNOT
    assert stats.relinks == 4
    zero = tree.node(tree.search(0))
    assert zero.parent.key == 2
    assert tree.in_order() == [0, 2, 3]
    assert tree.validate().ok


def test_delete_missing(pyramid7):
    with pytest.raises(KeyNotFound):
        delete(pyramid7, 42)


def test_delete_to_empty():
    tree = Cbst()
    insert(tree, 3)
    delete(tree, 3)
    assert tree.size == 0
    assert tree.root is None and tree.head is None and tree.tail is None
    assert tree.validate().ok


def test_choose_alternate_prefers_successor(pyramid7):
    assert pyramid7.key(choose_alternate(pyramid7, pyramid7.root)) == 5


def test_choose_alternate_rejects_non_knot(pyramid7):
    with pytest.raises(ContractViolation):
        choose_alternate(pyramid7, pyramid7.search(7))
    tree = Cbst()
    insert(tree, 1)
    insert(tree, 2)
    with pytest.raises(ContractViolation):
        choose_alternate(tree, tree.root)


def test_choose_alternate_falls_back_to_predecessor():
    tree = pyramid(7)
    four = tree.node(tree.root)
    # point the axis at a complete knot to force the fallback
    four.next = tree.node(tree.search(6))
    assert tree.key(choose_alternate(tree, tree.root)) == 3


def test_choose_alternate_never_returns_knot(rng):
    tree, _ = random_tree(rng, 400)
    for node in list(tree.axis_nodes()):
        ref = tree.ref(node)
        if tree.classify(ref) is NodeClass.COMPLETE_KNOT:
            assert tree.classify(choose_alternate(tree, ref)) is not NodeClass.COMPLETE_KNOT


def test_plain_mode_counts_no_fixups(plain7):
    stats = delete(plain7, 4)
    assert stats.counter_fixups == 0
    assert plain7.validate().ok


def test_fixups_bounded_by_depth(rng):
    tree, keys = random_tree(rng, 300)
    for key in rng.sample(sorted(keys), 150):
        depth = tree.max_depth()
        stats = delete(tree, key)
        assert stats.counter_fixups <= depth + 1
        assert stats.relinks <= 10


def _max_relinks(tree: Cbst, order) -> int:
    return max(delete(tree, key).relinks for key in order)


def test_relinks_do_not_grow_with_size():
    rng = random.Random(5)
    small = 0
    for _ in range(20):
        tree, keys = random_tree(rng, 256)
        order = list(keys)
        rng.shuffle(order)
        small = max(small, _max_relinks(tree, order))
    tree, keys = random_tree(rng, 4096)
    order = list(keys)
    rng.shuffle(order)
    large = _max_relinks(tree, order)
    assert small <= 10 and large <= 10
    assert large == small


@settings(max_examples=60, deadline=None)
@given(
    ops=st.lists(st.tuples(st.booleans(), st.integers(min_value=0, max_value=60)), max_size=120),
    mode=st.sampled_from(["plain", "ordinal"]),
)
def test_random_operations_keep_invariants(ops, mode):
    tree = Cbst(mode)
    present = set()
    for is_insert, key in ops:
        if is_insert:
            if key in present:
                with pytest.raises(DuplicateKey):
                    insert(tree, key)
            else:
                insert(tree, key)
                present.add(key)
        elif key in present:
            stats = delete(tree, key)
            assert stats.relinks <= 10
            present.discard(key)
        else:
            with pytest.raises(KeyNotFound):
                delete(tree, key)
        report = tree.validate()
        assert report.ok, report.messages
    assert tree.in_order() == sorted(present)
    assert tree.size == len(present)


def _sequence_size(rng: random.Random) -> int:
    if rng.random() < 0.03:
        return int(2 ** rng.uniform(6, 12))
    return rng.randrange(0, 65)


@pytest.mark.slow
def test_seeded_sequences_from_bulk_build():
    rng = random.Random(4096)
    for sequence in range(10_000):
        n = _sequence_size(rng)
        mode = "plain" if sequence % 4 == 0 else "ordinal"
        space = 4 * n + 8
        oracle = sorted(rng.sample(range(space), n))
        tree = build_from_sorted(oracle, mode)
        for _ in range(6):
            if oracle and rng.random() < 0.5:
                key = rng.choice(oracle)
                ref = tree.search(key)
                expected = None
                if tree.classify(ref) is NodeClass.COMPLETE_KNOT:
                    alternate = choose_alternate(tree, ref)
                    assert tree.classify(alternate) is not NodeClass.COMPLETE_KNOT
                    expected = tree.key(alternate)
                stats = delete(tree, key)
                assert stats.alternate == expected
                assert stats.relinks <= 10
                oracle.remove(key)
            else:
                key = rng.randrange(space)
                if key in tree:
                    with pytest.raises(DuplicateKey):
                        insert(tree, key)
                else:
                    insert(tree, key)
                    bisect.insort(oracle, key)
            report = tree.validate()
            assert report.ok, (sequence, report.messages)
            assert tree.in_order() == oracle
        if mode == "ordinal":
            for position, key in enumerate(oracle, start=1):
                assert tree.key(select(tree, position)) == key
                assert rank(tree, key) == position
