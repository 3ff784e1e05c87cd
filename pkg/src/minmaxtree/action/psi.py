"""The psi involutions acting on the minmax trees of permutations.

psi_i rewrites only the subtree rooted at position i. A minimum root
receives the largest entry of the subtree and a maximum root the
smallest. The entries left of the root keep their values. The entries
right of the root, which hold the other extremum, take the old root value
in its place and are relabelled so that their pattern is unchanged.
Leaves are fixed.

"""

import os
from collections.abc import Iterable
from typing import Callable, Optional

from minmaxtree.data import const
from minmaxtree.data.types import NodeKind, Permutation
from minmaxtree.errors import PositionOutOfRangeError
from minmaxtree.perm import relabel_order_isomorphic
from minmaxtree.tree.builder import build_minmax_fast
from minmaxtree.tree.query import leaf_positions, shape_signature

PsiOperator = Callable[[Permutation, int], Permutation]


def _debug_enabled() -> bool:
    return os.environ.get(const.debug_env, "").lower() in {"1", "true", "yes"}


def psi(p: Permutation, i: int, verify_shape: Optional[bool] = None) -> Permutation:
    """Apply the involution psi_i to p.

    Parameters
    ----------
    p : Permutation
        The permutation.
    i : int
        The position whose subtree is rewritten, in 1..n.
    verify_shape : Optional[bool]
        Rebuild the tree of the result and assert that the shape is
        preserved and only the kind at i flips. Defaults to the
        MINMAXTREE_DEBUG environment variable.

    Returns
    -------
    Permutation
        The image of p. Entries outside the span of i are untouched.

    Raises
    ------
    PositionOutOfRangeError
        If i lies outside 1..n.

    """
    tree = build_minmax_fast(p)
    kind = tree.kind(i)
    if kind is NodeKind.LEAF:
        return p

    lo, hi = tree.span(i)
    segment = p.entries[lo - 1 : hi]
    root = i - lo
    new_root = max(segment) if kind is NodeKind.MIN_ROOT else min(segment)

    # The other extremum lies right of the root; the left part is untouched
    left, right = segment[:root], segment[root + 1 :]
    values = [x for x in right if x != new_root] + [segment[root]]
    relabelled = [*left, new_root, *relabel_order_isomorphic(right, values)]

    entries = p.entries[: lo - 1] + tuple(relabelled) + p.entries[hi:]
    image = Permutation(entries)

    if verify_shape is None:
        verify_shape = _debug_enabled()
    if verify_shape:
        image_tree = build_minmax_fast(image)
        assert shape_signature(image_tree) == shape_signature(tree), (
            f"psi_{i} changed the tree shape of {p}"
        )
        expected = tuple(
            k.flipped() if j == i else k for j, k in enumerate(tree.kinds, 1)
        )
        assert image_tree.kinds == expected, f"psi_{i} changed node kinds of {p}"

    return image


def check_generators(n: int, indices: Iterable[int]) -> list[int]:
    """Validate generator indices against a permutation size.

    Parameters
    ----------
    n : int
        The permutation size.
    indices : Iterable[int]
        The generator indices.

    Returns
    -------
    list[int]
        The indices, sorted and unique.

    Raises
    ------
    PositionOutOfRangeError
        If an index lies outside 1..n.

    """
    indices = sorted(set(indices))
    bad = [i for i in indices if not 1 <= i <= n]
    if bad:
        msg = f"Generators {bad} outside 1..{n}."
        raise PositionOutOfRangeError(msg)
    return indices


def psi_set(
    p: Permutation, indices: Iterable[int], operator: PsiOperator = psi
) -> Permutation:
    """Compose psi over a set of generators, in ascending index order.

    Parameters
    ----------
    p : Permutation
        The permutation.
    indices : Iterable[int]
        The generator indices, a subset of 1..n.
    operator : PsiOperator
        The single-generator operator to compose.

    Returns
    -------
    Permutation
        The image of p, p itself for an empty set.

    """
    for i in check_generators(p.n, indices):
        p = operator(p, i)
    return p


def fixed_positions(p: Permutation) -> list[int]:
    """Return the positions i with psi(p, i) = p, which are the leaves."""
    return leaf_positions(build_minmax_fast(p))
