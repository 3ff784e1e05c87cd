"""Sparse tables for range minimum and maximum position queries.

After O(n log n) preprocessing, every query costs two table lookups:
the range [lo, hi] is covered by two overlapping power-of-two blocks.

"""

from collections.abc import Sequence


class ExtremumTable:
    """Range minimum and maximum positions over a sequence of distinct values.

    Positions are 0-based and ranges are inclusive.

    """

    def __init__(self, values: Sequence[int]) -> None:
        """Precompute the sparse tables.

        Parameters
        ----------
        values : Sequence[int]
            The values, pairwise distinct.

        """
        self.values = list(values)
        size = len(self.values)
        v = self.values

        # Level j holds the extremum position of [i, i + 2^j)
        mins = [list(range(size))]
        maxs = [list(range(size))]
        j = 1
        while (1 << j) <= size:
            half = 1 << (j - 1)
            width = size - (1 << j) + 1
            prev_min, prev_max = mins[-1], maxs[-1]
            mins.append(
                [
                    a if v[a] < v[b] else b
                    for a, b in zip(prev_min[:width], prev_min[half : half + width])
                ]
            )
            maxs.append(
                [
                    a if v[a] > v[b] else b
                    for a, b in zip(prev_max[:width], prev_max[half : half + width])
                ]
            )
            j += 1

        self._mins = mins
        self._maxs = maxs

    def __len__(self) -> int:
        return len(self.values)

    def argmin(self, lo: int, hi: int) -> int:
        """Position of the minimum value in [lo, hi]."""
        k = (hi - lo + 1).bit_length() - 1
        row = self._mins[k]
        a, b = row[lo], row[hi - (1 << k) + 1]
        return a if self.values[a] < self.values[b] else b

    def argmax(self, lo: int, hi: int) -> int:
        """Position of the maximum value in [lo, hi]."""
        k = (hi - lo + 1).bit_length() - 1
        row = self._maxs[k]
        a, b = row[lo], row[hi - (1 << k) + 1]
        return a if self.values[a] > self.values[b] else b

    def argmin_except(self, lo: int, hi: int, skip: int) -> int:
        """Position of the minimum value in [lo, hi] without position skip.

        The range must hold at least two positions.

        """
        if skip == lo:
            return self.argmin(lo + 1, hi)
        if skip == hi:
            return self.argmin(lo, hi - 1)
        a = self.argmin(lo, skip - 1)
        b = self.argmin(skip + 1, hi)
        return a if self.values[a] < self.values[b] else b
