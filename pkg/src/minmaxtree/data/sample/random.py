from collections.abc import Iterator

import numpy as np
from numpy.random import Generator, Philox

from minmaxtree.data.sample.sampler import PermutationSampler
from minmaxtree.data.types import Permutation

SEED_MASK = (1 << 64) - 1


def make_generator(seed: int, stream: int = 0) -> Generator:
    """Create a counter-based generator for one (seed, stream) pair.

    The seed and the stream form the two words of the Philox key, so
    distinct streams of the same seed are independent and each one is
    replayable on its own.

    Parameters
    ----------
    seed : int
        A 64-bit seed, larger values are truncated to 64 bits.
    stream : int
        The stream number.

    Returns
    -------
    Generator
        The seeded generator.

    """
    key = ((stream & SEED_MASK) << 64) | (seed & SEED_MASK)
    return Generator(Philox(key=key))


def random_permutation(n: int, seed: int, stream: int = 0) -> Permutation:
    """Draw a uniform permutation of size n.

    Parameters
    ----------
    n : int
        The permutation size.
    seed : int
        The generator seed.
    stream : int
        The stream number.

    Returns
    -------
    Permutation
        The same permutation for the same (seed, stream, n).

    """
    random = make_generator(seed, stream)
    return Permutation(tuple((random.permutation(n) + 1).tolist()))


class UniformSampler(PermutationSampler):
    """Uniform sampler over S_n, by Fisher-Yates shuffling."""

    def __init__(self, batch_size: int = 1024) -> None:
        """Initialize the sampler.

        Parameters
        ----------
        batch_size : int
            The number of permutations shuffled per vectorized call.

        """
        self.batch_size = batch_size

    def sample(self, n: int, random: Generator) -> Iterator[Permutation]:
        """Sample uniform permutations of size n infinitely.

        Parameters
        ----------
        n : int
            The permutation size.
        random : Generator
            The random generator for reproducibility.

        Yields
        ------
        Permutation
            A sampled permutation.

        """
        identity = np.arange(1, n + 1, dtype=np.int64)
        while True:
            # Shuffle every row independently
            batch = random.permuted(np.tile(identity, (self.batch_size, 1)), axis=1)
            for row in batch.tolist():
                yield Permutation(tuple(row))
