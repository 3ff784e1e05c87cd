import unittest

from minmaxtree.action.orbit import orbit
from minmaxtree.action.psi import psi
from minmaxtree.data import const
from minmaxtree.data.types import Permutation
from minmaxtree.errors import OrbitTooLargeError, PositionOutOfRangeError
from minmaxtree.perm import iter_permutations
from minmaxtree.tree.builder import build_minmax_fast
from minmaxtree.tree.query import leaf_positions
from test_utils import SAMPLE


class OrbitTest(unittest.TestCase):
    def test_small(self):
        record = orbit(Permutation((2, 1, 3)), [1, 2, 3])
        assert record.members == [Permutation((2, 1, 3)), Permutation((2, 3, 1))]
        assert record.effective.indices == (2,)
        assert record.generators.indices == (1, 2, 3)

    def test_empty_generators(self):
        record = orbit(SAMPLE, [])
        assert record.members == [SAMPLE]

    def test_running_example(self):
        record = orbit(SAMPLE, range(1, 11))
        assert record.size == 128
        assert SAMPLE in record
        assert record.members == sorted(record.members, key=lambda p: p.entries)
        for member in record.members:
            for i in record.generators:
                assert psi(member, i) in record

    def test_closed_exhaustive(self):
        for n in range(1, 6):
            for p in iter_permutations(n):
                record = orbit(p, range(1, n + 1))
                for member in record.members:
                    for i in range(1, n + 1):
                        assert psi(member, i) in record

    def test_sizes_exhaustive(self):
        for n in range(1, 7):
            for p in iter_permutations(n):
                internal = n - len(leaf_positions(build_minmax_fast(p)))
                assert orbit(p, range(1, n + 1)).size == 2**internal

    def test_guard(self):
        # 52 = 2 * 26: an increasing word is a right comb with one leaf
        p = Permutation(tuple(range(1, 53)))
        with self.assertRaises(OrbitTooLargeError):
            orbit(p, range(1, 53))
        assert orbit(p, [52]).size == 1
        with self.assertRaises(PositionOutOfRangeError):
            orbit(p, [53])

    def test_guard_counts_requested(self):
        # Leaves count against the guard even though they act trivially
        entries = []
        for k in range(30):
            entries.extend([2 * k + 2, 2 * k + 1])
        p = Permutation(tuple(entries))
        leaves = leaf_positions(build_minmax_fast(p))
        assert len(leaves) > const.max_orbit_generators
        with self.assertRaises(OrbitTooLargeError):
            orbit(p, leaves)
        record = orbit(p, leaves[: const.max_orbit_generators])
        assert record.size == 1
        assert record.effective.indices == ()
