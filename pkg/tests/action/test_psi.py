import os
import unittest
from itertools import combinations
from unittest import mock

import pytest
from hypothesis import given

from minmaxtree.action.psi import check_generators, fixed_positions, psi, psi_set
from minmaxtree.data import const
from minmaxtree.data.types import Permutation
from minmaxtree.errors import PositionOutOfRangeError
from minmaxtree.perm import iter_permutations
from minmaxtree.tree.builder import build_minmax_fast
from minmaxtree.tree.query import leaf_positions, shape_signature
from test_utils import SAMPLE, SAMPLE_PSI_7, permutations, psi_without_relabel


class PsiTest(unittest.TestCase):
    def test_examples(self):
        assert psi(SAMPLE, 7) == SAMPLE_PSI_7
        assert psi(Permutation((1, 2, 3)), 1) == Permutation((3, 1, 2))
        assert psi(Permutation((2, 1, 3)), 2) == Permutation((2, 3, 1))
        assert psi(Permutation((1,)), 1) == Permutation((1,))

    def test_left_part_kept(self):
        # 2 1 3 at position 2: the left part 2 stays, the right part takes 1
        image = psi(Permutation((2, 1, 3)), 2)
        assert psi(image, 2) == Permutation((2, 1, 3))
        for p in iter_permutations(6):
            tree = build_minmax_fast(p)
            for i in tree.positions():
                lo, _ = tree.span(i)
                assert psi(p, i).entries[lo - 1 : i - 1] == p.entries[lo - 1 : i - 1]

    def test_last_position_fixed(self):
        for p in iter_permutations(5):
            assert psi(p, 5) == p

    def test_out_of_range(self):
        for i in [0, 11]:
            with self.subTest(i=i), self.assertRaises(PositionOutOfRangeError):
                psi(SAMPLE, i)

    def test_entries_stay_in_span(self):
        tree = build_minmax_fast(SAMPLE)
        for i in tree.positions():
            lo, hi = tree.span(i)
            image = psi(SAMPLE, i)
            assert image.entries[: lo - 1] == SAMPLE.entries[: lo - 1]
            assert image.entries[hi:] == SAMPLE.entries[hi:]
            # Spans not strictly inside the span of i keep their entries
            for j in tree.positions():
                a, b = tree.span(j)
                if lo <= a and b <= hi and (a, b) != (lo, hi):
                    continue
                assert sorted(image.entries[a - 1 : b]) == sorted(SAMPLE.entries[a - 1 : b])

    def test_action_exhaustive(self):
        for n in range(1, 7):
            for p in iter_permutations(n):
                tree = build_minmax_fast(p)
                leaves = set(leaf_positions(tree))
                for i in range(1, n + 1):
                    image = psi(p, i, verify_shape=True)
                    assert psi(image, i) == p
                    assert (image == p) == (i in leaves)
                    assert shape_signature(build_minmax_fast(image)) == shape_signature(tree)

    def test_commute_exhaustive(self):
        for n in range(2, 6):
            for p in iter_permutations(n):
                for i, j in combinations(range(1, n + 1), 2):
                    assert psi(psi(p, i), j) == psi(psi(p, j), i)

    @pytest.mark.slow
    def test_action_n7(self):
        for p in iter_permutations(7):
            leaves = set(fixed_positions(p))
            for i in range(1, 8):
                image = psi(p, i, verify_shape=True)
                assert psi(image, i) == p
                assert (image == p) == (i in leaves)

    @pytest.mark.slow
    def test_commute_n6(self):
        for p in iter_permutations(6):
            for i, j in combinations(range(1, 7), 2):
                assert psi(psi(p, i), j) == psi(psi(p, j), i)

    @given(permutations(max_n=40))
    def test_involution_random(self, p):
        for i in range(1, p.n + 1):
            assert psi(psi(p, i, verify_shape=True), i) == p

    def test_debug_env(self):
        with mock.patch.dict(os.environ, {const.debug_env: "1"}):
            assert psi(SAMPLE, 7) == SAMPLE_PSI_7


class PsiSetTest(unittest.TestCase):
    def test_examples(self):
        p = Permutation((1, 3, 2))
        assert psi_set(p, []) == p
        assert psi_set(p, {1, 2}) == Permutation((3, 1, 2))
        assert psi_set(SAMPLE, {7}) == psi(SAMPLE, 7)

    def test_order_free(self):
        assert psi_set(SAMPLE, [7, 1, 4]) == psi_set(SAMPLE, [1, 4, 7])

    def test_out_of_range(self):
        with self.assertRaises(PositionOutOfRangeError):
            psi_set(Permutation((1, 2)), {3})
        assert check_generators(3, [3, 1, 1]) == [1, 3]

    def test_custom_operator(self):
        assert psi_set(Permutation((1, 2, 3)), {1}, psi_without_relabel) == Permutation(
            (3, 2, 1)
        )


class FixedPositionsTest(unittest.TestCase):
    def test_examples(self):
        assert fixed_positions(SAMPLE) == [3, 5, 10]
        assert fixed_positions(Permutation((1,))) == [1]
        assert fixed_positions(Permutation((1, 2))) == [2]

    def test_both_characterizations(self):
        for p in iter_permutations(5):
            by_psi = [i for i in range(1, 6) if psi(p, i) == p]
            assert fixed_positions(p) == by_psi
