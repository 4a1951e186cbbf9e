import pytest

from abstree.enumeration import (
    FREE_TREE_COUNTS,
    chemical_trees,
    free_level_sequences,
    free_trees,
    labeled_trees,
    prufer_decode,
    prufer_free_trees,
    trees_with_k_leaves,
)
from abstree.errors import OutOfRange
from abstree.families import make_path, make_star
from abstree.graph import Tree, canonical_code


def codes(trees):
    return [canonical_code(t) for t in trees]


def test_small_counts():
    assert len(list(free_trees(4))) == 2
    assert set(codes(free_trees(4))) == {canonical_code(make_path(4)), canonical_code(make_star(4))}
    assert len(list(free_trees(1))) == 1 and len(list(free_trees(2))) == 1


@pytest.mark.parametrize("n,count", [(7, 11), (9, 47)])
def test_documented_counts(n, count):
    assert len(list(free_trees(n))) == count


@pytest.mark.parametrize("n", range(1, 10))
def test_matches_prufer_oracle(n):
    assert set(codes(free_trees(n))) == set(codes(prufer_free_trees(n)))


@pytest.mark.parametrize("n", range(1, 8))
def test_reduced_prufer_oracle_matches_exhaustive(n):
    assert set(codes(prufer_free_trees(n))) == set(codes(prufer_free_trees(n, exhaustive=True)))


@pytest.mark.parametrize("n", range(2, 8))
def test_labeled_tree_count(n):
    assert len(list(labeled_trees(n))) == n ** (n - 2)


def test_prufer_decode_known():
    # sequence (3, 3, 3, 4) on 6 vertices
    t = prufer_decode([3, 3, 3, 4], 6)
    assert t == Tree(6, [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)])
    with pytest.raises(OutOfRange):
        prufer_decode([0], 4)


@pytest.mark.parametrize("n", range(1, 15))
def test_no_duplicates_and_census(n):
    cs = codes(free_trees(n))
    assert len(cs) == len(set(cs)) == FREE_TREE_COUNTS[n]


@pytest.mark.parametrize("n", range(3, 15))
def test_leaf_partition(n):
    total = sum(len(list(trees_with_k_leaves(n, k))) for k in range(2, n))
    assert total == FREE_TREE_COUNTS[n]


def test_deterministic_order():
    assert list(free_level_sequences(10)) == list(free_level_sequences(10))


@pytest.mark.parametrize("n", range(3, 12))
def test_extreme_leaf_counts(n):
    (p,) = trees_with_k_leaves(n, 2)
    (s,) = trees_with_k_leaves(n, n - 1)
    assert canonical_code(p) == canonical_code(make_path(n))
    assert canonical_code(s) == canonical_code(make_star(n))


def test_seven_three_against_oracle():
    got = set(codes(trees_with_k_leaves(7, 3)))
    want = {canonical_code(t) for t in prufer_free_trees(7) if t.degrees.count(1) == 3}
    # one degree-3 vertex with legs summing to 6: (4,1,1), (3,2,1), (2,2,2)
    assert got == want and len(got) == 3


def test_chemical():
    assert list(chemical_trees(6, 5)) == []
    (s5,) = chemical_trees(5, 4)
    assert canonical_code(s5) == canonical_code(make_star(5))
    trees = list(chemical_trees(10, 4))
    assert trees and all(t.max_degree() <= 4 for t in trees)
    for n in range(3, 6):
        assert len(list(chemical_trees(n, n - 1))) == 1


@pytest.mark.parametrize("n,k", [(2, 1), (5, 1), (5, 5), (0, None), (40, None)])
def test_out_of_range(n, k):
    with pytest.raises(OutOfRange):
        if k is None:
            list(free_trees(n))
        else:
            list(trees_with_k_leaves(n, k))
