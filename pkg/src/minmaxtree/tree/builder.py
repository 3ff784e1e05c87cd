"""Minmax and min1-min2 tree construction.

A tree is grown by splitting a span of positions at its root: the
leftmost of the two distinguished entries of the span (minimum and
maximum, or minimum and second minimum). The left and right remainders
become the child subtrees. Spans are processed with an explicit stack,
so chains as deep as the permutation is long are fine.

"""

import heapq
from collections.abc import Sequence
from typing import Callable

import numpy as np

from minmaxtree.data import const
from minmaxtree.data.types import MinMaxTree, NodeKind, Permutation, TreeVariant
from minmaxtree.tree.rmq import ExtremumTable

# Maps an inclusive 0-based span of size >= 2 to its root and role
RootPicker = Callable[[int, int], tuple[int, NodeKind]]


def scan_minmax(values: Sequence[int]) -> RootPicker:
    """Root picker by linear scans, leftmost of minimum and maximum."""

    def pick(lo: int, hi: int) -> tuple[int, NodeKind]:
        segment = values[lo : hi + 1]
        low = lo + segment.index(min(segment))
        high = lo + segment.index(max(segment))
        if low < high:
            return low, NodeKind.MIN_ROOT
        return high, NodeKind.MAX_ROOT

    return pick


def table_minmax(values: Sequence[int]) -> RootPicker:
    """Root picker by sparse tables, leftmost of minimum and maximum."""
    table = ExtremumTable(values)

    def pick(lo: int, hi: int) -> tuple[int, NodeKind]:
        low = table.argmin(lo, hi)
        high = table.argmax(lo, hi)
        if low < high:
            return low, NodeKind.MIN_ROOT
        return high, NodeKind.MAX_ROOT

    return pick


def scan_min12(values: Sequence[int]) -> RootPicker:
    """Root picker by linear scans, leftmost of minimum and second minimum."""

    def pick(lo: int, hi: int) -> tuple[int, NodeKind]:
        segment = values[lo : hi + 1]
        first, second = heapq.nsmallest(2, segment)
        low = lo + segment.index(first)
        next_low = lo + segment.index(second)
        if low < next_low:
            return low, NodeKind.MIN_ROOT
        return next_low, NodeKind.MAX_ROOT

    return pick


def table_min12(values: Sequence[int]) -> RootPicker:
    """Root picker by sparse tables, leftmost of minimum and second minimum."""
    table = ExtremumTable(values)

    def pick(lo: int, hi: int) -> tuple[int, NodeKind]:
        low = table.argmin(lo, hi)
        next_low = table.argmin_except(lo, hi, low)
        if low < next_low:
            return low, NodeKind.MIN_ROOT
        return next_low, NodeKind.MAX_ROOT

    return pick


PICKERS: dict[tuple[TreeVariant, bool], Callable[[Sequence[int]], RootPicker]] = {
    (TreeVariant.MINMAX, False): scan_minmax,
    (TreeVariant.MINMAX, True): table_minmax,
    (TreeVariant.MIN12, False): scan_min12,
    (TreeVariant.MIN12, True): table_min12,
}


def grow(p: Permutation, variant: TreeVariant, pick: RootPicker) -> MinMaxTree:
    """Grow the tree of p by splitting spans with a root picker.

    Parameters
    ----------
    p : Permutation
        The permutation.
    variant : TreeVariant
        The variant the picker implements.
    pick : RootPicker
        The root selection rule.

    Returns
    -------
    MinMaxTree
        The tree.

    """
    n = p.n
    parents = [0] * n
    lefts = [0] * n
    rights = [0] * n
    spans = [(0, 0)] * n
    depths = [0] * n
    kinds = [NodeKind.LEAF] * n

    # Entries are (lo, hi, parent, is_left), 0-based, parent -1 for the root
    root = -1
    stack = [(0, n - 1, -1, False)]
    while stack:
        lo, hi, parent, is_left = stack.pop()
        if lo == hi:
            node, kind = lo, NodeKind.LEAF
        else:
            node, kind = pick(lo, hi)

        spans[node] = (lo + 1, hi + 1)
        kinds[node] = kind
        if parent < 0:
            root = node
        else:
            parents[node] = parent + 1
            depths[node] = depths[parent] + 1
            if is_left:
                lefts[parent] = node + 1
            else:
                rights[parent] = node + 1

        if node < hi:
            stack.append((node + 1, hi, node, False))
        if node > lo:
            stack.append((lo, node - 1, node, True))

    return MinMaxTree(
        permutation=p,
        variant=variant,
        root=root + 1,
        parents=tuple(parents),
        lefts=tuple(lefts),
        rights=tuple(rights),
        spans=tuple(spans),
        depths=tuple(depths),
        kinds=tuple(kinds),
    )


def build_minmax(p: Permutation) -> MinMaxTree:
    """Build the minmax tree by direct linear scans.

    This is the reference construction, quadratic in the worst case.

    Parameters
    ----------
    p : Permutation
        The permutation.

    Returns
    -------
    MinMaxTree
        The minmax tree of p.

    """
    return grow(p, TreeVariant.MINMAX, scan_minmax(p.entries))


def build_minmax_fast(p: Permutation) -> MinMaxTree:
    """Build the minmax tree with sparse-table range queries.

    Identical output to build_minmax, O(n log n) time.

    Parameters
    ----------
    p : Permutation
        The permutation.

    Returns
    -------
    MinMaxTree
        The minmax tree of p.

    """
    return grow(p, TreeVariant.MINMAX, table_minmax(p.entries))


def build_min12(p: Permutation, fast: bool = True) -> MinMaxTree:
    """Build the min1-min2 tree of p.

    The root of every subtree is the leftmost of the minimum and the
    second minimum of its span.

    Parameters
    ----------
    p : Permutation
        The permutation.
    fast : bool
        Use sparse tables instead of linear scans.

    Returns
    -------
    MinMaxTree
        The min1-min2 tree of p.

    """
    return grow(p, TreeVariant.MIN12, PICKERS[TreeVariant.MIN12, fast](p.entries))


def build_tree(
    p: Permutation, variant: TreeVariant = TreeVariant.MINMAX, fast: bool = True
) -> MinMaxTree:
    """Build the tree of p for any variant."""
    return grow(p, variant, PICKERS[variant, fast](p.entries))


def children_counts(values: Sequence[int], variant: TreeVariant) -> list[int]:
    """Count the children of every position by splitting spans.

    This walks the same span decomposition as build_tree but records only
    the number of children per position. Census sizes use slice scans,
    larger inputs the sparse-table pickers. The values are not validated.

    Parameters
    ----------
    values : Sequence[int]
        The entries of a permutation.
    variant : TreeVariant
        The root selection rule.

    Returns
    -------
    list[int]
        Number of children per position, 0-based.

    """
    if len(values) <= const.scan_kernel_max_n:
        return _scan_children_counts(values, variant)

    pick = PICKERS[variant, True](values)
    counts = [0] * len(values)
    stack = [(0, len(values) - 1)]
    while stack:
        lo, hi = stack.pop()
        if lo == hi:
            continue
        node, _ = pick(lo, hi)
        if node > lo:
            counts[node] += 1
            stack.append((lo, node - 1))
        if node < hi:
            counts[node] += 1
            stack.append((node + 1, hi))
    return counts


def _scan_children_counts(values: Sequence[int], variant: TreeVariant) -> list[int]:
    n = len(values)
    counts = [0] * n
    index = values.index
    min12 = variant is TreeVariant.MIN12
    stack = [(0, n - 1)] if n > 1 else []
    while stack:
        lo, hi = stack.pop()
        segment = values[lo : hi + 1]
        if min12:
            first, second = sorted(segment)[:2]
        else:
            first, second = min(segment), max(segment)
        node = min(index(first, lo), index(second, lo))
        if node > lo:
            counts[node] += 1
            if node - lo > 1:
                stack.append((lo, node - 1))
        if node < hi:
            counts[node] += 1
            if hi - node > 1:
                stack.append((node + 1, hi))
    return counts


def batch_children_counts(perms: np.ndarray, variant: TreeVariant) -> np.ndarray:
    """Count the children of every position for a batch of permutations.

    All spans at the same depth are split together, one row per span,
    with positions outside a span masked by sentinels.

    Parameters
    ----------
    perms : np.ndarray
        An (m, n) integer array, one permutation of 1..n per row.
    variant : TreeVariant
        The root selection rule.

    Returns
    -------
    np.ndarray
        An (m, n) int8 array of children counts.

    """
    m, n = perms.shape
    counts = np.zeros((m, n), dtype=np.int8)
    if n < 2:  # noqa: PLR2004
        return counts

    cols = np.arange(n)
    rows = np.arange(m)
    lo = np.zeros(m, dtype=np.intp)
    hi = np.full(m, n - 1, dtype=np.intp)
    while rows.size:
        inside = (cols >= lo[:, None]) & (cols <= hi[:, None])
        masked = np.where(inside, perms[rows], n + 1)
        low = masked.argmin(axis=1)
        if variant is TreeVariant.MIN12:
            masked[np.arange(rows.size), low] = n + 1
            other = masked.argmin(axis=1)
        else:
            other = np.where(inside, perms[rows], 0).argmax(axis=1)
        node = np.minimum(low, other)
        counts[rows, node] = (node > lo).astype(np.int8) + (node < hi)

        # Spans of one position are leaves
        left = node - lo > 1
        right = hi - node > 1
        rows = np.concatenate([rows[left], rows[right]])
        lo, hi = (
            np.concatenate([lo[left], node[right] + 1]),
            np.concatenate([node[left] - 1, hi[right]]),
        )
    return counts
