import logging
from itertools import islice
from typing import Optional

import numpy as np

from minmaxtree.data import const
from minmaxtree.data.sample.random import UniformSampler, make_generator
from minmaxtree.data.sample.sampler import PermutationSampler
from minmaxtree.data.types import EstimateTable, TreeVariant
from minmaxtree.errors import NTooSmallError
from minmaxtree.tree.builder import children_counts

logger = logging.getLogger(__name__)


def estimate_leaf_probabilities(
    n: int,
    trials: int,
    seed: int,
    stream: int = 0,
    variant: TreeVariant = TreeVariant.MINMAX,
    z: float = const.default_z,
    sampler: Optional[PermutationSampler] = None,
) -> EstimateTable:
    """Estimate, per position, the probability of being a leaf.

    Parameters
    ----------
    n : int
        The permutation size, at least 3.
    trials : int
        The number of sampled permutations.
    seed : int
        The generator seed.
    stream : int
        The generator stream.
    variant : TreeVariant
        The tree variant.
    z : float
        Width of the acceptance band, in standard errors.
    sampler : Optional[PermutationSampler]
        The permutation sampler, uniform by default.

    Returns
    -------
    EstimateTable
        Leaf frequencies and their standard errors, deterministic for a
        fixed (n, trials, seed, stream).

    Raises
    ------
    NTooSmallError
        If n < 3.
    ValueError
        If trials < 1.

    """
    if n < const.min_census_n:
        msg = f"Estimation needs n >= {const.min_census_n}, got n={n}."
        raise NTooSmallError(msg)
    if trials < 1:
        msg = f"Estimation needs at least one trial, got {trials}."
        raise ValueError(msg)
    if trials < const.min_reliable_trials:
        logger.warning("Only %d trials, standard errors will be unreliable.", trials)

    if sampler is None:
        sampler = UniformSampler()
    random = make_generator(seed, stream)

    leaves = [0] * n
    for p in islice(sampler.sample(n, random), trials):
        for pos, count in enumerate(children_counts(p.entries, variant)):
            if count == 0:
                leaves[pos] += 1

    q = np.array(leaves, dtype=np.float64) / trials
    standard_errors = np.sqrt(q * (1.0 - q) / trials)
    return EstimateTable(
        n=n,
        trials=trials,
        seed=seed,
        probabilities=q.tolist(),
        standard_errors=standard_errors.tolist(),
        z=z,
    )
