"""Free-tree enumeration: counts, isomorphism-exactness, determinism, and
agreement with the independent reference routes."""

import pytest

from sombor_trees._kernels import pure
from sombor_trees.enumeration import (
    TreeFamilyQuery,
    enumerate_family,
    enumerate_free_trees,
    prufer_to_tree,
)
from sombor_trees.errors import SizeLimitError
from sombor_trees.invariants import independence_number
from sombor_trees.tree import canonical_code

from conftest import grow_by_leaf, prufer_iso_classes, trees_of_order

# A000055: non-isomorphic trees by order
FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159]
# A000081: rooted trees by order
ROOTED_TREE_COUNTS = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842]


class TestCounts:
    def test_known_free_tree_counts(self):
        for n, expected in enumerate(FREE_TREE_COUNTS, start=1):
            assert len(trees_of_order(n)) == expected

    def test_known_rooted_tree_counts(self):
        for n, expected in enumerate(ROOTED_TREE_COUNTS, start=1):
            assert sum(1 for _ in pure.iter_rooted_level_sequences(n)) == expected

    def test_order_4_is_path_and_star(self):
        codes = {canonical_code(t) for t in trees_of_order(4)}
        from sombor_trees.tree import Tree

        assert codes == {canonical_code(Tree.path(4)), canonical_code(Tree.star(4))}

    def test_cap_enforced(self):
        with pytest.raises(SizeLimitError):
            list(enumerate_free_trees(21))
        with pytest.raises(SizeLimitError):
            list(enumerate_free_trees(11, cap=10))


class TestIsomorphismExactness:
    def test_codes_pairwise_distinct(self):
        for n in range(1, 12):
            codes = [canonical_code(t) for t in trees_of_order(n)]
            assert len(codes) == len(set(codes))

    def test_prufer_reference_agreement_to_7(self):
        # the labeled-tree sweep deduplicated by iso class must reproduce the
        # stream exactly (orders 8 and 9 run in the acceptance suite)
        for n in range(2, 8):
            labeled_ids, interner = prufer_iso_classes(n)
            stream_ids = {interner.class_id_of_tree(t) for t in trees_of_order(n)}
            assert stream_ids == labeled_ids
            assert len(stream_ids) == len(trees_of_order(n))

    def test_structural_induction_cross_check_10_to_12(self):
        # every order n+1 tree is an order-n tree plus a leaf
        for n in (10, 11, 12):
            grown = grow_by_leaf(trees_of_order(n - 1))
            assert len(grown) == FREE_TREE_COUNTS[n - 1]
            assert set(grown) == {canonical_code(t) for t in trees_of_order(n)}

    def test_jump_and_filter_modes_agree(self):
        for n in range(3, 13):
            fast = list(pure.iter_level_sequences(n, use_jump=True))
            slow = list(pure.iter_level_sequences(n, use_jump=False))
            assert fast == slow


class TestDeterminism:
    def test_stream_order_is_reproducible(self):
        first = [canonical_code(t) for t in enumerate_free_trees(9)]
        second = [canonical_code(t) for t in enumerate_free_trees(9)]
        assert first == second


class TestFamilies:
    def test_alpha_n_minus_1_is_the_star(self):
        trees = list(enumerate_family(TreeFamilyQuery(6, 5)))
        assert len(trees) == 1
        assert trees[0].degrees.count(5) == 1

    def test_infeasible_alpha_is_empty(self):
        assert list(enumerate_family(TreeFamilyQuery(6, 2))) == []

    def test_family_7_4_has_6_members(self):
        assert len(list(enumerate_family(TreeFamilyQuery(7, 4)))) == 6

    def test_family_sizes_partition_the_order(self):
        import math

        for n in range(2, 13):
            sizes = {}
            for t in trees_of_order(n):
                a = independence_number(t)
                sizes[a] = sizes.get(a, 0) + 1
            assert sum(sizes.values()) == FREE_TREE_COUNTS[n - 1]
            assert min(sizes) >= math.ceil(n / 2)
            assert max(sizes) == n - 1


class TestPrufer:
    def test_decode_star(self):
        t = prufer_to_tree((0, 0), 4)
        assert t.degrees == (3, 1, 1, 1)

    def test_decode_validates(self):
        with pytest.raises(ValueError):
            prufer_to_tree((0,), 4)
        with pytest.raises(ValueError):
            prufer_to_tree((5, 0), 4)
