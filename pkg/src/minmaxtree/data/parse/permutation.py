import re
from collections.abc import Iterable, Iterator

from minmaxtree.data.types import Permutation
from minmaxtree.errors import EmptyInputError, NotAPermutationError

SEPARATOR = re.compile(r"[\s,]+")
DIGITS = re.compile(r"[0-9]+")


def parse_permutation(text: str) -> Permutation:
    """Parse a permutation in one-line notation.

    Entries may be separated by whitespace, commas, or both.

    Parameters
    ----------
    text : str
        The permutation text, e.g. "3 6 7 1 5 2 10 4 9 8".

    Returns
    -------
    Permutation
        The parsed permutation.

    Raises
    ------
    EmptyInputError
        If the text holds no tokens.
    NotAPermutationError
        If a token is not a positive integer, or the entries are not
        a permutation of 1..n.

    """
    tokens = [t for t in SEPARATOR.split(text.strip()) if t]
    if not tokens:
        msg = "No entries found in permutation text."
        raise EmptyInputError(msg)

    entries = []
    for token in tokens:
        if not DIGITS.fullmatch(token):
            msg = f"Invalid entry {token!r}, expected a positive integer."
            raise NotAPermutationError(msg)
        value = int(token)
        if value < 1:
            msg = f"Invalid entry {value}, entries must be positive."
            raise NotAPermutationError(msg)
        entries.append(value)

    return Permutation(tuple(entries))


def parse_lines(lines: Iterable[str]) -> Iterator[Permutation]:
    """Parse one permutation per line.

    Blank lines and lines starting with "#" are skipped.

    Parameters
    ----------
    lines : Iterable[str]
        The input lines.

    Yields
    ------
    Permutation
        The parsed permutations, in input order.

    """
    for line in lines:
        line = line.strip()  # noqa: PLW2901
        if not line or line.startswith("#"):
            continue
        yield parse_permutation(line)
