import unittest

import numpy as np
import pytest
from hypothesis import given, settings

from minmaxtree.data.sample.random import random_permutation
from minmaxtree.data.types import NodeKind, Permutation, TreeVariant
from minmaxtree.perm import iter_permutations
from minmaxtree.tree.builder import (
    batch_children_counts,
    build_min12,
    build_minmax,
    build_minmax_fast,
    build_tree,
    children_counts,
)
from test_utils import SAMPLE, SAMPLE_DEPTHS, SAMPLE_PARENTS, permutations


class BuildMinmaxTest(unittest.TestCase):
    def test_running_example(self):
        tree = build_minmax(SAMPLE)
        assert tree.root == 4
        for i, depth in SAMPLE_DEPTHS.items():
            with self.subTest(i=i):
                assert tree.depth(i) == depth
        for i, parent in SAMPLE_PARENTS.items():
            with self.subTest(i=i):
                assert tree.parent(i) == parent
        assert [i for i in tree.positions() if tree.kind(i) is NodeKind.MAX_ROOT] == [7, 9]
        assert [i for i in tree.positions() if tree.kind(i) is NodeKind.LEAF] == [3, 5, 10]

    def test_small(self):
        tree = build_minmax(Permutation((2, 1, 3)))
        assert tree.root == 2
        assert tree.children(2) == [1, 3]

        tree = build_minmax(Permutation((1,)))
        assert tree.root == 1
        assert tree.kind(1) is NodeKind.LEAF

        # Increasing and decreasing words give right combs
        for entries in [(1, 2, 3, 4), (4, 3, 2, 1)]:
            tree = build_minmax(Permutation(entries))
            with self.subTest(entries=entries):
                assert tree.rights == (2, 3, 4, 0)
                assert tree.lefts == (0, 0, 0, 0)

    def test_long_chain(self):
        n = 5000
        tree = build_minmax_fast(Permutation(tuple(range(1, n + 1))))
        assert tree.depth(n) == n - 1

    def test_fast_agrees_exhaustive(self):
        for p in iter_permutations(6):
            assert build_minmax_fast(p) == build_minmax(p)

    @pytest.mark.slow
    def test_fast_agrees_s8(self):
        for p in iter_permutations(8):
            assert build_minmax_fast(p) == build_minmax(p)

    @pytest.mark.slow
    def test_fast_agrees_large(self):
        for stream in range(1000):
            p = random_permutation(1000, seed=20240601, stream=stream)
            assert build_minmax_fast(p) == build_minmax(p)

    @given(permutations(max_n=60))
    def test_fast_agrees_random(self, p):
        assert build_minmax_fast(p) == build_minmax(p)


class BuildMin12Test(unittest.TestCase):
    def test_small(self):
        # min 1 at 3, second min 2 at 1
        tree = build_min12(Permutation((2, 4, 1, 3)))
        assert tree.variant is TreeVariant.MIN12
        assert tree.root == 1
        assert tree.kind(1) is NodeKind.MAX_ROOT
        assert tree.right(1) == 3
        assert tree.children(3) == [2, 4]

    def test_fast_agrees_exhaustive(self):
        for p in iter_permutations(6):
            assert build_min12(p, fast=True) == build_min12(p, fast=False)

    @given(permutations(max_n=60))
    @settings(max_examples=50)
    def test_fast_agrees_random(self, p):
        assert build_min12(p, fast=True) == build_min12(p, fast=False)

    def test_dispatch(self):
        assert build_tree(SAMPLE) == build_minmax(SAMPLE)
        assert build_tree(SAMPLE, TreeVariant.MIN12, fast=False) == build_min12(SAMPLE)


class ChildrenCountsTest(unittest.TestCase):
    def test_matches_trees(self):
        for variant in TreeVariant:
            for p in iter_permutations(5):
                tree = build_tree(p, variant)
                expected = [len(tree.children(i)) for i in tree.positions()]
                with self.subTest(variant=variant, p=str(p)):
                    assert children_counts(p.entries, variant) == expected

    @given(permutations(min_n=21, max_n=60))
    @settings(max_examples=50)
    def test_matches_trees_large(self, p):
        for variant in TreeVariant:
            tree = build_tree(p, variant)
            expected = [len(tree.children(i)) for i in tree.positions()]
            assert children_counts(p.entries, variant) == expected

    def test_batch_matches_single(self):
        for n in range(1, 7):
            perms = [p.entries for p in iter_permutations(n)]
            for variant in TreeVariant:
                counts = batch_children_counts(np.array(perms), variant)
                with self.subTest(n=n, variant=variant):
                    assert counts.shape == (len(perms), n)
                    assert counts.tolist() == [children_counts(e, variant) for e in perms]
