class MinMaxTreeError(ValueError):
    """Base class for all domain errors."""


class NotAPermutationError(MinMaxTreeError):
    """The input is not a permutation of 1..n."""


class EmptyInputError(MinMaxTreeError):
    """The input contains no entries."""


class DuplicateValuesError(MinMaxTreeError):
    """A word contains repeated values."""


class SizeMismatchError(MinMaxTreeError):
    """A value set does not match the length of a word."""


class IndexOutOfRangeError(MinMaxTreeError):
    """A lexicographic index lies outside [0, n!)."""


class NTooLargeError(MinMaxTreeError):
    """The requested size exceeds an exact-arithmetic or runtime limit."""


class NTooSmallError(MinMaxTreeError):
    """The requested size is below the minimum an operation supports."""


class PositionOutOfRangeError(MinMaxTreeError):
    """A position lies outside the range an operation accepts."""


class WrongVariantError(MinMaxTreeError):
    """The operation is not defined for this tree variant."""


class OrbitTooLargeError(MinMaxTreeError):
    """The orbit closure would exceed the generator guard."""


class ConfigError(MinMaxTreeError):
    """A check suite config or override cannot be loaded."""
