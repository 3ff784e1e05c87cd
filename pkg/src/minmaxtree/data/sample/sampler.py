from abc import ABC, abstractmethod
from collections.abc import Iterator

from numpy.random import Generator

from minmaxtree.data.types import Permutation


class PermutationSampler(ABC):
    """Abstract base class for permutation samplers."""

    @abstractmethod
    def sample(self, n: int, random: Generator) -> Iterator[Permutation]:
        """Sample permutations of size n infinitely.

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
        raise NotImplementedError
