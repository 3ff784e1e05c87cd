import math
import unittest

from hypothesis import given
from hypothesis import strategies as st

from minmaxtree.data.types import Permutation
from minmaxtree.errors import (
    DuplicateValuesError,
    EmptyInputError,
    IndexOutOfRangeError,
    NTooLargeError,
    SizeMismatchError,
)
from minmaxtree.perm import (
    complement,
    factorial_checked,
    format_permutation,
    iter_entries,
    iter_permutations,
    pattern_of,
    rank,
    relabel_order_isomorphic,
    successor,
    unrank,
)
from test_utils import SAMPLE, permutations


class PermutationArithmeticTest(unittest.TestCase):
    def test_complement(self):
        assert complement(Permutation((2, 1, 3))) == Permutation((2, 3, 1))
        assert complement(Permutation((1,))) == Permutation((1,))
        assert complement(complement(SAMPLE)) == SAMPLE

    def test_format(self):
        assert format_permutation(SAMPLE) == "3 6 7 1 5 2 10 4 9 8"

    def test_pattern(self):
        assert pattern_of([10, 30, 20]) == Permutation((1, 3, 2))
        assert pattern_of([-5]) == Permutation((1,))
        with self.assertRaises(DuplicateValuesError):
            pattern_of([4, 4])
        with self.assertRaises(EmptyInputError):
            pattern_of([])

    def test_relabel(self):
        assert relabel_order_isomorphic([10, 30, 20], {4, 5, 9}) == [4, 9, 5]
        assert relabel_order_isomorphic([3, 1, 2], {1, 2, 3}) == [3, 1, 2]
        assert relabel_order_isomorphic([], set()) == []
        with self.assertRaises(SizeMismatchError):
            relabel_order_isomorphic([1, 2], {1, 2, 3})

    def test_factorial(self):
        assert factorial_checked(20) == math.factorial(20)
        with self.assertRaises(NTooLargeError):
            factorial_checked(21)


class LexicographicOrderTest(unittest.TestCase):
    def test_unrank(self):
        cases = [
            (3, 0, (1, 2, 3)),
            (3, 2, (2, 1, 3)),
            (3, 5, (3, 2, 1)),
            (4, 23, (4, 3, 2, 1)),
            (1, 0, (1,)),
        ]
        for n, k, entries in cases:
            with self.subTest(n=n, k=k):
                assert unrank(n, k) == Permutation(entries)
                assert rank(Permutation(entries)) == k

    def test_unrank_out_of_range(self):
        with self.assertRaises(IndexOutOfRangeError):
            unrank(3, 6)
        with self.assertRaises(IndexOutOfRangeError):
            unrank(3, -1)
        with self.assertRaises(NTooLargeError):
            unrank(21, 0)

    def test_successor(self):
        assert successor(Permutation((1, 3, 2))) == Permutation((2, 1, 3))
        assert successor(Permutation((1, 2))) == Permutation((2, 1))
        assert successor(Permutation((3, 2, 1))) is None
        assert successor(Permutation((1,))) is None

    def test_enumeration_order(self):
        perms = list(iter_permutations(4))
        assert len(perms) == 24
        assert [rank(p) for p in perms] == list(range(24))
        assert len(set(perms)) == 24

    def test_intervals_concatenate(self):
        whole = [tuple(e) for e in iter_entries(5)]
        parts = []
        for start, stop in [(0, 7), (7, 60), (60, 119), (119, 120)]:
            parts.extend(tuple(e) for e in iter_entries(5, start, stop))
        assert parts == whole
        assert list(iter_entries(5, 10, 10)) == []

    @given(permutations(max_n=20))
    def test_rank_inverts_unrank(self, p):
        assert unrank(p.n, rank(p)) == p

    @given(permutations(max_n=12))
    def test_successor_increments_rank(self, p):
        nxt = successor(p)
        if nxt is None:
            assert rank(p) == math.factorial(p.n) - 1
        else:
            assert rank(nxt) == rank(p) + 1

    @given(st.lists(st.integers(), min_size=1, max_size=30, unique=True))
    def test_pattern_keeps_comparisons(self, w):
        pattern = pattern_of(w)
        for a in range(len(w)):
            for b in range(len(w)):
                assert (w[a] < w[b]) == (pattern.entries[a] < pattern.entries[b])
