import json
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import NewType, Optional

from mashumaro.mixins.dict import DataClassDictMixin
from mashumaro.types import SerializableType

from minmaxtree.data import const
from minmaxtree.errors import (
    EmptyInputError,
    NotAPermutationError,
    PositionOutOfRangeError,
)

####################################################################################################
# SERIALIZABLE
####################################################################################################


class JSONSerializable(DataClassDictMixin):
    """Serializable datatype."""

    @classmethod
    def load(cls: "JSONSerializable", path: Path) -> "JSONSerializable":
        """Load the object from a JSON file.

        Parameters
        ----------
        path : Path
            The path to the file.

        Returns
        -------
        Serializable
            The loaded object.

        """
        with path.open("r") as f:
            return cls.from_dict(json.load(f))

    def dump(self, path: Path) -> None:
        """Dump the object to a JSON file.

        Parameters
        ----------
        path : Path
            The path to the file.

        """
        with path.open("w") as f:
            f.write(self.to_json())

    def to_json(self) -> str:
        """Serialize the object to a deterministic JSON string.

        Returns
        -------
        str
            The JSON text, keys in field order.

        """
        return json.dumps(self.to_dict())


####################################################################################################
# PERMUTATION
####################################################################################################

# Lexicographic index of a permutation in S_n, in [0, n!)
LexIndex = NewType("LexIndex", int)


@dataclass(frozen=True)
class Permutation(SerializableType):
    """A permutation of 1..n in one-line notation.

    Positions and values are both 1-based. The entry at position i
    is available as ``p[i]``; iteration yields the entries in order.

    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate that the entries form a bijection on 1..n."""
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            msg = "A permutation needs at least one entry."
            raise EmptyInputError(msg)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            msg = f"Entries {list(entries)} are not a permutation of 1..{len(entries)}."
            raise NotAPermutationError(msg)

    @property
    def n(self) -> int:
        """The size of the permutation."""
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        """Return the entry at 1-based position i."""
        if not 1 <= i <= len(self.entries):
            msg = f"Position {i} outside 1..{len(self.entries)}."
            raise PositionOutOfRangeError(msg)
        return self.entries[i - 1]

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.entries)

    def _serialize(self) -> list[int]:
        return list(self.entries)

    @classmethod
    def _deserialize(cls, value: list[int]) -> "Permutation":
        return cls(tuple(value))


####################################################################################################
# TREE
####################################################################################################


class TreeVariant(str, Enum):
    """Which pair of extremal entries picks the subtree roots."""

    MINMAX = "minmax"
    MIN12 = "min12"


class NodeKind(str, Enum):
    """Classification of a tree node.

    For the min1-min2 variant, MIN_ROOT marks a root holding the span
    minimum and MAX_ROOT a root holding the span second minimum.

    """

    LEAF = "Leaf"
    MIN_ROOT = "Min"
    MAX_ROOT = "Max"

    def flipped(self) -> "NodeKind":
        """Swap the min and max roles, leaves are fixed."""
        if self is NodeKind.MIN_ROOT:
            return NodeKind.MAX_ROOT
        if self is NodeKind.MAX_ROOT:
            return NodeKind.MIN_ROOT
        return self


@dataclass(frozen=True)
class ShapeSignature:
    """Canonical encoding of a tree shape, without entries.

    Attributes
    ----------
    lefts : tuple[int, ...]
        Left child per position, 0 when absent.
    rights : tuple[int, ...]
        Right child per position, 0 when absent.

    """

    lefts: tuple[int, ...]
    rights: tuple[int, ...]

    def encode(self) -> str:
        """Encode the shape as a single line of text."""
        left = ",".join(str(x) for x in self.lefts)
        right = ",".join(str(x) for x in self.rights)
        return f"L:{left};R:{right}"


@dataclass(frozen=True)
class MinMaxTree(JSONSerializable):
    """Position-indexed binary tree of a permutation.

    Every per-position tuple is stored 0-based, so position i lives at
    index i - 1. Absent parents and children are stored as 0. The
    accessors take and return 1-based positions.

    Attributes
    ----------
    permutation : Permutation
        The permutation the tree was built from.
    variant : TreeVariant
        The root selection rule.
    root : int
        The position of the root.
    parents : tuple[int, ...]
        Parent per position, 0 for the root.
    lefts : tuple[int, ...]
        Left child per position, 0 when absent.
    rights : tuple[int, ...]
        Right child per position, 0 when absent.
    spans : tuple[tuple[int, int], ...]
        Inclusive position interval covered by each subtree.
    depths : tuple[int, ...]
        Distance to the root, the root has depth 0.
    kinds : tuple[NodeKind, ...]
        Node classification per position.

    """

    permutation: Permutation
    variant: TreeVariant
    root: int
    parents: tuple[int, ...]
    lefts: tuple[int, ...]
    rights: tuple[int, ...]
    spans: tuple[tuple[int, int], ...]
    depths: tuple[int, ...]
    kinds: tuple[NodeKind, ...]

    @property
    def n(self) -> int:
        """The number of nodes."""
        return len(self.parents)

    def check_position(self, i: int) -> None:
        """Raise if i is not a position of the tree.

        Raises
        ------
        PositionOutOfRangeError
            If i lies outside 1..n.

        """
        if not 1 <= i <= self.n:
            msg = f"Position {i} outside 1..{self.n}."
            raise PositionOutOfRangeError(msg)

    def entry(self, i: int) -> int:
        """The permutation entry stored at position i."""
        return self.permutation[i]

    def parent(self, i: int) -> Optional[int]:
        """The parent position of i, None for the root."""
        self.check_position(i)
        return self.parents[i - 1] or None

    def left(self, i: int) -> Optional[int]:
        """The left child position of i, if any."""
        self.check_position(i)
        return self.lefts[i - 1] or None

    def right(self, i: int) -> Optional[int]:
        """The right child position of i, if any."""
        self.check_position(i)
        return self.rights[i - 1] or None

    def children(self, i: int) -> list[int]:
        """The child positions of i, left first."""
        self.check_position(i)
        return [c for c in (self.lefts[i - 1], self.rights[i - 1]) if c]

    def span(self, i: int) -> tuple[int, int]:
        """The inclusive position interval of the subtree rooted at i."""
        self.check_position(i)
        return self.spans[i - 1]

    def depth(self, i: int) -> int:
        """The depth of position i."""
        self.check_position(i)
        return self.depths[i - 1]

    def kind(self, i: int) -> NodeKind:
        """The node kind of position i."""
        self.check_position(i)
        return self.kinds[i - 1]

    def positions(self) -> range:
        """All positions, ascending."""
        return range(1, self.n + 1)


####################################################################################################
# ACTION
####################################################################################################


@dataclass(frozen=True)
class GeneratorSet(SerializableType):
    """A set of psi generator indices, kept sorted and unique."""

    indices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Normalize the indices."""
        object.__setattr__(self, "indices", tuple(sorted(set(self.indices))))

    @classmethod
    def of(cls, indices: Iterable[int]) -> "GeneratorSet":
        """Build a generator set from any iterable of positions."""
        return cls(tuple(indices))

    @classmethod
    def full(cls, n: int) -> "GeneratorSet":
        """All positions 1..n."""
        return cls(tuple(range(1, n + 1)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, i: object) -> bool:
        return i in self.indices

    def _serialize(self) -> list[int]:
        return list(self.indices)

    @classmethod
    def _deserialize(cls, value: list[int]) -> "GeneratorSet":
        return cls(tuple(value))


@dataclass(frozen=True)
class OrbitRecord(JSONSerializable):
    """The closure of a permutation under a set of psi generators.

    Attributes
    ----------
    base : Permutation
        The starting permutation.
    generators : GeneratorSet
        The requested generator indices.
    effective : GeneratorSet
        The requested generators that are not leaves of the base tree.
        The leaf set is constant on an orbit, so the others act trivially
        on every member.
    members : list[Permutation]
        The orbit, in lexicographic order.

    """

    base: Permutation
    generators: GeneratorSet
    effective: GeneratorSet
    members: list[Permutation]

    @property
    def size(self) -> int:
        """The number of members."""
        return len(self.members)

    def __contains__(self, p: object) -> bool:
        return p in self.members


####################################################################################################
# CENSUS
####################################################################################################


@dataclass(frozen=True)
class CensusTable(JSONSerializable):
    """Exact child-count statistics over all of S_n.

    Attributes
    ----------
    n : int
        The permutation size.
    variant : TreeVariant
        The tree variant counted.
    total : int
        The number of permutations, n!.
    leaf_counts : list[int]
        Per position, the number of permutations where it is a leaf.
    d : list[list[int]]
        Per position, the number of permutations where it has
        exactly 0, 1 and 2 children.

    """

    n: int
    variant: TreeVariant
    total: int
    leaf_counts: list[int]
    d: list[list[int]]

    def rows(self) -> list[tuple[int, int, int, int, int]]:
        """One (i, leaf, d0, d1, d2) row per position."""
        return [
            (i, leaf, *counts)
            for i, (leaf, counts) in enumerate(zip(self.leaf_counts, self.d), start=1)
        ]

    def same_counts(self, other: "CensusTable") -> bool:
        """Whether two tables hold identical numbers, ignoring the variant."""
        return (
            self.n == other.n
            and self.total == other.total
            and self.leaf_counts == other.leaf_counts
            and self.d == other.d
        )


@dataclass(frozen=True)
class EstimateTable(JSONSerializable):
    """Sampled leaf probabilities per position.

    Attributes
    ----------
    n : int
        The permutation size.
    trials : int
        The number of sampled permutations.
    seed : int
        The generator seed.
    probabilities : list[float]
        Per position, the fraction of samples where it is a leaf.
    standard_errors : list[float]
        Per position, sqrt(q (1 - q) / trials).
    z : float
        Width of the acceptance band, in standard errors.

    """

    n: int
    trials: int
    seed: int
    probabilities: list[float]
    standard_errors: list[float]
    z: float = const.default_z

    def bounds(self, i: int) -> tuple[float, float]:
        """The band of z standard errors around the estimate at position i."""
        q = self.probabilities[i - 1]
        width = self.z * self.standard_errors[i - 1]
        return max(0.0, q - width), min(1.0, q + width)

    def within(self, i: int, expected: float) -> bool:
        """Whether the estimate at i lies within z standard errors of expected.

        The standard error is taken at the expected probability, so an
        expected value of 0 or 1 demands an exact match.

        Parameters
        ----------
        i : int
            The position.
        expected : float
            The reference probability.

        Returns
        -------
        bool
            True if the estimate is inside the band.

        """
        standard_error = math.sqrt(expected * (1.0 - expected) / self.trials)
        return abs(self.probabilities[i - 1] - expected) <= self.z * standard_error


####################################################################################################
# VERIFICATION
####################################################################################################


@dataclass(frozen=True)
class CheckResult(JSONSerializable):
    """Outcome of one verification check at one size.

    Attributes
    ----------
    name : str
        The check name.
    parameters : dict[str, int]
        The parameters the check ran with, at least n.
    passed : bool
        Whether the check held.
    counterexample : Optional[Permutation]
        A permutation violating the check, when one exists.
    detail : str
        A human readable description of the failure.

    """

    name: str
    parameters: dict[str, int]
    passed: bool
    counterexample: Optional[Permutation] = None
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport(JSONSerializable):
    """All check results of a verification run."""

    n_max: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        """The failing checks, in run order."""
        return [r for r in self.results if not r.passed]
