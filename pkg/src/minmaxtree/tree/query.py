from minmaxtree.data.types import MinMaxTree, NodeKind, ShapeSignature, TreeVariant
from minmaxtree.errors import PositionOutOfRangeError, WrongVariantError


def node_kind(t: MinMaxTree, i: int) -> NodeKind:
    """Classify position i as a leaf, a minimum root or a maximum root.

    Parameters
    ----------
    t : MinMaxTree
        The tree.
    i : int
        The position, in 1..n.

    Returns
    -------
    NodeKind
        The kind of the node.

    Raises
    ------
    PositionOutOfRangeError
        If i lies outside 1..n.

    """
    return t.kind(i)


def children_count(t: MinMaxTree, i: int) -> int:
    """Return the number of children of position i, in {0, 1, 2}."""
    return len(t.children(i))


def leaf_positions(t: MinMaxTree) -> list[int]:
    """Return the positions without children, ascending."""
    return [i for i in t.positions() if not t.lefts[i - 1] and not t.rights[i - 1]]


def is_ancestor(t: MinMaxTree, a: int, b: int) -> bool:
    """Whether position a is a strict ancestor of position b."""
    lo, hi = t.span(a)
    t.check_position(b)
    return a != b and lo <= b <= hi


def local_extremum(t: MinMaxTree, i: int) -> int:
    """Return the position closest to the root among i, i + 1 and i + 2.

    Parameters
    ----------
    t : MinMaxTree
        The tree.
    i : int
        The first position, in 1..n-2.

    Returns
    -------
    int
        The position of minimal depth. It is a strict ancestor of the
        other two positions.

    Raises
    ------
    PositionOutOfRangeError
        If n < 3 or i lies outside 1..n-2.

    """
    if not 1 <= i <= t.n - 2:
        msg = f"Local extremum needs 1 <= i <= n-2, got i={i} with n={t.n}."
        raise PositionOutOfRangeError(msg)
    return min((i, i + 1, i + 2), key=t.depth)


def is_andre(t: MinMaxTree) -> bool:
    """Whether every internal node of a minmax tree is a minimum node.

    Raises
    ------
    WrongVariantError
        If the tree is not a minmax tree.

    """
    if t.variant is not TreeVariant.MINMAX:
        msg = f"André test needs a minmax tree, got {t.variant.value}."
        raise WrongVariantError(msg)
    return all(kind is not NodeKind.MAX_ROOT for kind in t.kinds)


def shape_signature(t: MinMaxTree) -> ShapeSignature:
    """Return the shape of the tree, without entries."""
    return ShapeSignature(lefts=t.lefts, rights=t.rights)


def _check_root_rule(t: MinMaxTree) -> bool:
    for i in t.positions():
        lo, hi = t.spans[i - 1]
        kind = t.kinds[i - 1]
        if lo == hi:
            if kind is not NodeKind.LEAF:
                return False
            continue

        segment = t.permutation.entries[lo - 1 : hi]
        if t.variant is TreeVariant.MINMAX:
            first, other = min(segment), max(segment)
        else:
            first, other = sorted(segment)[:2]
        first_pos = lo + segment.index(first)
        other_pos = lo + segment.index(other)
        expected_kind = (
            NodeKind.MIN_ROOT if first_pos < other_pos else NodeKind.MAX_ROOT
        )
        if i != min(first_pos, other_pos) or kind is not expected_kind:
            return False
    return True


def _check_spans(t: MinMaxTree) -> bool:
    for i in t.positions():
        lo, hi = t.spans[i - 1]
        if not lo <= i <= hi:
            return False
        left, right = t.lefts[i - 1], t.rights[i - 1]
        if left:
            if t.spans[left - 1] != (lo, i - 1):
                return False
        elif lo != i:
            return False
        if right:
            if t.spans[right - 1] != (i + 1, hi):
                return False
        elif hi != i:
            return False
    return t.spans[t.root - 1] == (1, t.n)


def _check_links(t: MinMaxTree) -> bool:
    roots = [i for i in t.positions() if not t.parents[i - 1]]
    if roots != [t.root] or t.depths[t.root - 1] != 0:
        return False
    for i in t.positions():
        for child in (t.lefts[i - 1], t.rights[i - 1]):
            if child and (
                t.parents[child - 1] != i or t.depths[child - 1] != t.depths[i - 1] + 1
            ):
                return False
    return True


def check_tree(t: MinMaxTree) -> list[str]:
    """Scan a tree for violated structural invariants.

    Parameters
    ----------
    t : MinMaxTree
        The tree.

    Returns
    -------
    list[str]
        The names of the violated invariants, empty if the tree is sound.

    """
    violations = []
    if not _check_root_rule(t):
        violations.append("root-rule")
    if not _check_spans(t):
        violations.append("spans")
    if not _check_links(t):
        violations.append("links")

    n = t.n
    leaves = set(leaf_positions(t))
    if any(
        not (is_ancestor(t, i, i + 1) or is_ancestor(t, i + 1, i)) for i in range(1, n)
    ):
        violations.append("adjacent-ancestry")
    if any(i in leaves and i + 1 in leaves for i in range(1, n)):
        violations.append("adjacent-leaves")
    if n not in leaves or (n > 1 and t.parents[n - 1] != n - 1):
        violations.append("last-position")
    if any(t.lefts[i - 1] and not t.rights[i - 1] for i in t.positions()):
        violations.append("right-child")
    if n >= 3 and (children_count(t, n - 1) == 2) != (n - 2 in leaves):
        violations.append("last-pair")
    return violations
