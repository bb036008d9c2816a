import pytest

from cbst import build_from_sorted, no_foul_check, plan_skeleton, rank
from cbst.errors import DomainError, DuplicateKey, NotSorted
from cbst.pyramid import pyramid_rounds

from helpers import pyramid


def _subtree_positions(plan, position):
    out = []
    stack = [position]
    while stack:
        p = stack.pop()
        out.append(p)
        stack.extend(c for c in plan.children(p) if c is not None)
    return out


def test_plan_seven():
    plan = plan_skeleton(7)
    assert plan.root == 4
    assert plan.children(4) == (2, 6)
    assert plan.children(2) == (1, 3)
    assert plan.children(6) == (5, 7)
    assert plan.side[0] == "left" and plan.side[2] == "right"
    assert plan.parent[3] is None
    assert plan.depth == 2


def test_plan_trivial_sizes():
    assert plan_skeleton(0).root is None
    single = plan_skeleton(1)
    assert single.root == 1
    assert single.children(1) == (None, None)
    assert single.depth == 0
    with pytest.raises(DomainError):
        plan_skeleton(-1)


def test_plan_twelve_clips_right_child():
    plan = plan_skeleton(12)
    assert plan.root == 8
    assert plan.children(8) == (4, 12)
    assert plan.children(12) == (10, None)
    assert plan.depth == 3


@pytest.mark.parametrize("k", range(1, 13))
def test_rounds_agree_with_plan(k):
    n = (1 << k) - 1
    plan = plan_skeleton(n)
    links = list(pyramid_rounds(n))
    assert len(links) == n // 2
    for parent, left, right in links:
        assert plan.children(parent) == (left, right)


@pytest.mark.parametrize("k", range(2, 13))
def test_round_distances(k):
    n = (1 << k) - 1
    plan = plan_skeleton(n)
    for parent, left, right in pyramid_rounds(n):
        j = (parent & -parent).bit_length() - 1
        width = 1 << (j - 1)
        # right child is one round-j step away
        assert right - parent == width
        # the left child (a round j-1 parent) reaches back to parent - 1
        assert max(_subtree_positions(plan, left)) - left == width - 1
        assert parent - left == width


def test_rounds_need_perfect_size():
    with pytest.raises(DomainError):
        list(pyramid_rounds(12))


def _check_plan(n):
    plan = plan_skeleton(n)
    parents = [p for p in plan.parent if p is not None]
    assert len(parents) == n - 1
    assert plan.parent[plan.root - 1] is None
    assert plan.depth == n.bit_length() - 1
    for p in range(1, n + 1):
        left, right = plan.children(p)
        if left is not None:
            assert max(_subtree_positions(plan, left)) == p - 1
        if right is not None:
            # leftmost of the right subtree sits immediately after p
            assert min(_subtree_positions(plan, right)) == p + 1
    children = sorted(c for p in range(1, n + 1) for c in plan.children(p) if c is not None)
    assert children == sorted(set(children))


@pytest.mark.parametrize("n", list(range(1, 130)) + [255, 256, 257, 511, 512, 513, 1000])
def test_plan_shape(n):
    _check_plan(n)


@pytest.mark.slow
def test_plan_shape_exhaustive():
    for n in range(1, 4097):
        tree = pyramid(n, "plain")
        assert tree.max_depth() == n.bit_length() - 1
        assert tree.validate().ok, n
        assert no_foul_check(tree)


def test_build_seven(pyramid7):
    assert pyramid7.key(pyramid7.root) == 4
    assert pyramid7.in_order() == list(range(1, 8))
    assert [rank(pyramid7, key) for key in range(1, 8)] == list(range(1, 8))


def test_build_empty():
    tree = build_from_sorted([])
    assert tree.size == 0 and tree.root is None
    assert tree.validate().ok


def test_build_depth():
    assert pyramid(2047).max_depth() == 10
    assert pyramid(2048).max_depth() == 11


@pytest.mark.parametrize("n", list(range(1, 70)) + [255, 256, 600, 1023, 1024, 1025])
def test_built_trees_validate(n):
    tree = pyramid(n)
    report = tree.validate()
    assert report.ok, report.messages
    assert no_foul_check(tree)


def test_build_rejects_bad_input():
    with pytest.raises(NotSorted):
        build_from_sorted([1, 3, 2])
    with pytest.raises(DuplicateKey):
        build_from_sorted([1, 2, 2, 3])


def test_no_foul_detects_swap(pyramid7):
    one = pyramid7.node(pyramid7.search(1))
    seven = pyramid7.node(pyramid7.search(7))
    one.key, seven.key = seven.key, one.key
    assert not no_foul_check(pyramid7)


def test_link_writes_linear():
    for n in (1, 10, 1000, 5000):
        tree = pyramid(n)
        assert tree.stats.link_writes <= 4 * n
