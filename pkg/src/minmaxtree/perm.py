"""Permutation arithmetic: complement, patterns and lexicographic indexing.

All positions and values are 1-based. Lexicographic order is the
canonical enumeration order, so rank intervals are contiguous and can be
handed to workers independently.

"""

import math
from collections.abc import Iterable, Iterator, Sequence
from typing import Optional

from minmaxtree.data import const
from minmaxtree.data.types import LexIndex, Permutation
from minmaxtree.errors import (
    DuplicateValuesError,
    EmptyInputError,
    IndexOutOfRangeError,
    NTooLargeError,
    SizeMismatchError,
)

# Any sequence of pairwise distinct integers
Word = Sequence[int]


def factorial_checked(n: int) -> int:
    """Return n! for sizes whose counts fit a 64-bit integer.

    Parameters
    ----------
    n : int
        The permutation size.

    Returns
    -------
    int
        The factorial of n.

    Raises
    ------
    NTooLargeError
        If n exceeds the exact-arithmetic limit.

    """
    if n > const.max_exact_n:
        msg = (
            f"n={n} exceeds the exact limit {const.max_exact_n} (n! must fit 64 bits)."
        )
        raise NTooLargeError(msg)
    return math.factorial(n)


def format_permutation(p: Permutation) -> str:
    """Return the entries of p separated by single spaces."""
    return " ".join(str(x) for x in p)


def complement(p: Permutation) -> Permutation:
    """Return the permutation with entries n + 1 - p_i."""
    n = p.n
    return Permutation(tuple(n + 1 - x for x in p))


def _check_word(w: Word) -> None:
    if not w:
        msg = "A pattern needs a nonempty word."
        raise EmptyInputError(msg)
    if len(set(w)) != len(w):
        msg = f"Word {list(w)} has repeated values."
        raise DuplicateValuesError(msg)


def _rank_positions(w: Word) -> list[int]:
    """Positions of w (0-based) ordered by increasing value."""
    return sorted(range(len(w)), key=w.__getitem__)


def pattern_of(w: Word) -> Permutation:
    """Return the permutation order-isomorphic to a word.

    Parameters
    ----------
    w : Word
        A nonempty word of distinct integers.

    Returns
    -------
    Permutation
        The pattern: result_i < result_j iff w_i < w_j.

    Raises
    ------
    DuplicateValuesError
        If two letters coincide.

    """
    _check_word(w)
    pattern = [0] * len(w)
    for rank, pos in enumerate(_rank_positions(w), start=1):
        pattern[pos] = rank
    return Permutation(tuple(pattern))


def relabel_order_isomorphic(w: Word, values: Iterable[int]) -> list[int]:
    """Replace the letters of w by a new value set, keeping all comparisons.

    The i-th smallest value goes to the position of the i-th smallest
    letter of w.

    Parameters
    ----------
    w : Word
        A word of distinct integers.
    values : Iterable[int]
        The new values, as many distinct ones as w has letters.

    Returns
    -------
    list[int]
        The relabelled word.

    Raises
    ------
    SizeMismatchError
        If the value set and the word differ in size.

    """
    targets = sorted(set(values))
    if len(targets) != len(w):
        msg = f"Cannot relabel a word of length {len(w)} with {len(targets)} values."
        raise SizeMismatchError(msg)
    if not w:
        return []
    _check_word(w)
    result = [0] * len(w)
    for value, pos in zip(targets, _rank_positions(w)):
        result[pos] = value
    return result


def unrank(n: int, k: int) -> Permutation:
    """Return the k-th permutation of S_n in lexicographic order.

    Parameters
    ----------
    n : int
        The permutation size.
    k : int
        The lexicographic index, in [0, n!).

    Returns
    -------
    Permutation
        The permutation of rank k.

    Raises
    ------
    IndexOutOfRangeError
        If k lies outside [0, n!).
    NTooLargeError
        If n exceeds the exact-arithmetic limit.

    """
    return Permutation(tuple(_unrank_entries(n, k)))


def _unrank_entries(n: int, k: int) -> list[int]:
    total = factorial_checked(n)
    if not 0 <= k < total:
        msg = f"Index {k} outside [0, {n}!)."
        raise IndexOutOfRangeError(msg)

    # Read the factorial number system digits from the most significant one
    available = list(range(1, n + 1))
    entries = []
    remainder = k
    for v in range(n - 1, -1, -1):
        digit, remainder = divmod(remainder, math.factorial(v))
        entries.append(available.pop(digit))
    return entries


def rank(p: Permutation) -> LexIndex:
    """Return the lexicographic index of p (the inverse of unrank).

    Raises
    ------
    NTooLargeError
        If p is longer than the exact-arithmetic limit.

    """
    n = p.n
    factorial_checked(n)
    available = list(range(1, n + 1))
    index = 0
    for pos, x in enumerate(p):
        digit = available.index(x)
        available.pop(digit)
        index += digit * math.factorial(n - 1 - pos)
    return LexIndex(index)


def next_in_place(entries: list[int]) -> bool:
    """Advance a list to its lexicographic successor.

    Parameters
    ----------
    entries : list[int]
        The entries, modified in place.

    Returns
    -------
    bool
        False if the list was already the last permutation, in which
        case it is left unchanged.

    """
    # Find the rightmost ascent
    i = len(entries) - 2
    while i >= 0 and entries[i] > entries[i + 1]:
        i -= 1
    if i < 0:
        return False

    # Swap with the smallest larger entry to its right, then reverse the tail
    j = len(entries) - 1
    while entries[j] < entries[i]:
        j -= 1
    entries[i], entries[j] = entries[j], entries[i]
    entries[i + 1 :] = entries[: i : -1]
    return True


def successor(p: Permutation) -> Optional[Permutation]:
    """Return the next permutation in lexicographic order, or None if last."""
    entries = list(p)
    if not next_in_place(entries):
        return None
    return Permutation(tuple(entries))


def iter_entries(
    n: int, start: int = 0, stop: Optional[int] = None
) -> Iterator[list[int]]:
    """Stream the entries of the permutations with rank in [start, stop).

    The same list object is yielded on every step and mutated afterwards,
    consumers copy it if they keep it.

    Parameters
    ----------
    n : int
        The permutation size.
    start : int
        The first rank, inclusive.
    stop : Optional[int]
        The last rank, exclusive, n! by default.

    Yields
    ------
    list[int]
        The entries of the current permutation.

    """
    total = factorial_checked(n)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    entries = _unrank_entries(n, start)
    for _ in range(stop - start - 1):
        yield entries
        next_in_place(entries)
    yield entries


def iter_permutations(
    n: int, start: int = 0, stop: Optional[int] = None
) -> Iterator[Permutation]:
    """Stream the permutations with rank in [start, stop) in lexicographic order."""
    for entries in iter_entries(n, start, stop):
        yield Permutation(tuple(entries))
