from fractions import Fraction

import pytest

from congruent import fermat

F = Fraction


def test_root_node():
    root = fermat.node_from_fraction(F(1))
    assert (root.a, root.b, root.c) == (1, 0, 1)
    assert root.kind == "root"


def test_node_from_fraction_validates_parity():
    with pytest.raises(ValueError):
        fermat.node_from_fraction(F(2, 3))


def test_off_tree_fraction_rejected():
    # (13/7) gives the Pythagorean (91, -60, 109), but 91-60 is not square
    with pytest.raises(ValueError):
        fermat.node_from_fraction(F(13, 7))


def test_children_of_root():
    root = fermat.node_from_fraction(F(1))
    kids = fermat.children(root)
    assert len(kids) == 1  # the root's other branch reproduces itself
    child = fermat.node_from_fraction(kids[0])
    assert (child.a, child.b, child.c) == (-119, 120, 169)
    assert child.kind == "diff"


def test_tree_depth_two_contains_table_entries():
    tree = fermat.enumerate_tree(2)
    triples = {(n.a, n.b, n.c) for _, n in tree.nodes}
    assert (-119, 120, 169) in triples
    assert (2276953, -473304, 2325625) in triples
    assert (4565486027761, 1061652293520, 4687298610289) in triples


def test_smallest_sum_witnesses():
    tree = fermat.enumerate_tree(2)
    small = tree.smallest_sum()
    assert (small.a, small.b, small.c) == (4565486027761, 1061652293520, 4687298610289)
    assert small.sum_root == 2372159
    assert small.hyp_root == 2165017
    assert small.a + small.b == small.sum_root**2
    assert small.c == small.hyp_root**2


def test_tree_growth_and_invariants():
    tree = fermat.enumerate_tree(3)
    for depth, node in tree.nodes:
        assert node.a**2 + node.b**2 == node.c**2
        assert depth <= 3
    kinds = {n.kind for _, n in tree.nodes}
    assert kinds == {"root", "sum", "diff"}


def test_negative_depth_rejected():
    with pytest.raises(ValueError):
        fermat.enumerate_tree(-1)
