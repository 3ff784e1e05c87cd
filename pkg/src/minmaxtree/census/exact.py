"""Exhaustive counting over S_n.

The rank range [0, n!) is cut into contiguous intervals, one per worker.
Each worker streams its interval in lexicographic order, builds every
tree and keeps a private count table. Tables are merged by integer
addition, so the result does not depend on the number of workers or on
the order in which intervals finish.

"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable

import numpy as np

from minmaxtree.action.psi import PsiOperator, psi
from minmaxtree.data import const
from minmaxtree.data.types import CensusTable, Permutation, TreeVariant
from minmaxtree.errors import NTooLargeError, NTooSmallError
from minmaxtree.perm import factorial_checked, iter_entries
from minmaxtree.tree.builder import (
    batch_children_counts,
    build_minmax_fast,
    children_counts,
)
from minmaxtree.tree.query import is_andre

logger = logging.getLogger(__name__)

IntervalTask = Callable[..., np.ndarray]


@dataclass
class CensusConfig:
    """Census run configuration.

    Attributes
    ----------
    n : int
        The permutation size.
    variant : TreeVariant
        The tree variant to count.
    workers : int
        The number of worker processes.
    allow_large : bool
        Raise the size ceiling to the exact-arithmetic limit.

    """

    n: int
    variant: TreeVariant = TreeVariant.MINMAX
    workers: int = 1
    allow_large: bool = False


def check_census_size(n: int, allow_large: bool = False) -> None:
    """Validate a census size against the default and override ceilings.

    Raises
    ------
    NTooSmallError
        If n is below the minimum census size.
    NTooLargeError
        If n is above the active ceiling.

    """
    if n < const.min_census_n:
        msg = f"Census needs n >= {const.min_census_n}, got n={n}."
        raise NTooSmallError(msg)

    limit = const.max_exact_n if allow_large else const.default_census_max_n
    if n > limit:
        msg = f"Census size n={n} exceeds the limit {limit}."
        if not allow_large:
            msg += " Pass the large-size override to go up to the exact limit."
        raise NTooLargeError(msg)
    if n > const.default_census_max_n:
        logger.warning(
            "Census at n=%d enumerates %d permutations, this will take very long.",
            n,
            factorial_checked(n),
        )


def rank_intervals(total: int, parts: int) -> list[tuple[int, int]]:
    """Cut [0, total) into contiguous intervals whose sizes differ by at most one.

    Parameters
    ----------
    total : int
        The size of the range.
    parts : int
        The number of intervals wanted.

    Returns
    -------
    list[tuple[int, int]]
        Half-open (start, stop) intervals in ascending order.

    """
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    intervals = []
    start = 0
    for k in range(parts):
        stop = start + size + (1 if k < extra else 0)
        intervals.append((start, stop))
        start = stop
    return intervals


def scan(
    n: int, task: IntervalTask, workers: int = 1, args: Sequence = ()
) -> np.ndarray:
    """Run an interval task over all of S_n and sum the partial tables.

    Parameters
    ----------
    n : int
        The permutation size.
    task : IntervalTask
        A picklable function (n, start, stop, *args) -> int64 array.
    workers : int
        The number of worker processes, 1 runs in the current process.
    args : Sequence
        Extra arguments passed to the task.

    Returns
    -------
    np.ndarray
        The summed table.

    """
    intervals = rank_intervals(factorial_checked(n), workers)
    tasks = [(n, start, stop, *args) for start, stop in intervals]
    logger.debug(
        "Scanning S_%d in %d intervals of about %d permutations",
        n,
        len(tasks),
        intervals[0][1] - intervals[0][0],
    )

    if workers > 1:
        with Pool(workers) as pool:
            partials = pool.starmap(task, tasks)
    else:
        partials = [task(*t) for t in tasks]

    return np.sum(partials, axis=0, dtype=np.int64)


def count_children_interval(
    n: int, start: int, stop: int, variant: TreeVariant
) -> np.ndarray:
    """Count (position, number of children) over one rank interval.

    Returns
    -------
    np.ndarray
        An (n, 3) int64 table.

    """
    table = np.zeros((n, 3), dtype=np.int64)
    chunk: list[list[int]] = []

    def tally() -> None:
        counts = batch_children_counts(np.array(chunk, dtype=np.int16), variant)
        for k in range(3):
            table[:, k] += np.count_nonzero(counts == k, axis=0)
        chunk.clear()

    for entries in iter_entries(n, start, stop):
        chunk.append(entries.copy())
        if len(chunk) >= const.census_chunk:
            tally()
    if chunk:
        tally()
    return table


def census_exact(
    n: int,
    variant: TreeVariant = TreeVariant.MINMAX,
    workers: int = 1,
    allow_large: bool = False,
) -> CensusTable:
    """Count leaves and children per position over all of S_n.

    Parameters
    ----------
    n : int
        The permutation size, at least 3.
    variant : TreeVariant
        The tree variant to count.
    workers : int
        The number of worker processes.
    allow_large : bool
        Allow sizes up to the exact-arithmetic limit.

    Returns
    -------
    CensusTable
        Exact counts, identical for every number of workers.

    Raises
    ------
    NTooSmallError
        If n < 3.
    NTooLargeError
        If n exceeds the active ceiling.

    """
    check_census_size(n, allow_large)
    d = scan(n, count_children_interval, workers, (TreeVariant(variant),))
    return CensusTable(
        n=n,
        variant=TreeVariant(variant),
        total=factorial_checked(n),
        leaf_counts=d[:, 0].tolist(),
        d=d.tolist(),
    )


def count_andre_interval(n: int, start: int, stop: int) -> np.ndarray:
    """Count André permutations over one rank interval."""
    count = 0
    for entries in iter_entries(n, start, stop):
        if is_andre(build_minmax_fast(Permutation(tuple(entries)))):
            count += 1
    return np.array([count], dtype=np.int64)


def count_andre(n: int, workers: int = 1) -> int:
    """Count the permutations of S_n whose minmax tree has only minimum nodes.

    Parameters
    ----------
    n : int
        The permutation size.
    workers : int
        The number of worker processes.

    Returns
    -------
    int
        The number of André permutations.

    """
    if n > const.default_census_max_n:
        msg = f"André count size n={n} exceeds the limit {const.default_census_max_n}."
        raise NTooLargeError(msg)
    return int(scan(n, count_andre_interval, workers)[0])


def complement_split_interval(n: int, start: int, stop: int) -> np.ndarray:
    """Leaf counts split by whether 1 precedes n, over one rank interval."""
    split = [[0] * n, [0] * n]
    for entries in iter_entries(n, start, stop):
        row = split[0] if entries.index(1) < entries.index(n) else split[1]
        for pos, count in enumerate(children_counts(entries, TreeVariant.MINMAX)):
            if count == 0:
                row[pos] += 1
    return np.array(split, dtype=np.int64)


def complement_split(n: int, workers: int = 1) -> tuple[list[int], list[int]]:
    """Leaf counts over permutations where 1 precedes n, and where n precedes 1.

    Complementation swaps the two halves and keeps the tree shape, so
    the two count lists coincide.

    Parameters
    ----------
    n : int
        The permutation size, at least 2.
    workers : int
        The number of worker processes.

    Returns
    -------
    tuple[list[int], list[int]]
        Per position leaf counts for both halves.

    """
    if n < 2:  # noqa: PLR2004
        msg = f"Complement split needs n >= 2, got n={n}."
        raise NTooSmallError(msg)
    table = scan(n, complement_split_interval, workers)
    return table[0].tolist(), table[1].tolist()


def fixed_point_interval(
    n: int, start: int, stop: int, operator: PsiOperator
) -> np.ndarray:
    """Count fixed points of each generator over one rank interval."""
    counts = [0] * n
    for entries in iter_entries(n, start, stop):
        p = Permutation(tuple(entries))
        for i in range(1, n + 1):
            if operator(p, i) == p:
                counts[i - 1] += 1
    return np.array(counts, dtype=np.int64)


def fixed_point_counts(
    n: int, operator: PsiOperator = psi, workers: int = 1
) -> list[int]:
    """Count, per position i, the permutations of S_n fixed by psi_i.

    Parameters
    ----------
    n : int
        The permutation size.
    operator : PsiOperator
        The operator to test, it must be picklable when workers > 1.
    workers : int
        The number of worker processes.

    Returns
    -------
    list[int]
        The fixed point count of every generator.

    """
    return scan(n, fixed_point_interval, workers, (operator,)).tolist()
