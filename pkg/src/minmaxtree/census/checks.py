"""Verification checks over S_n.

Every check answers for one permutation size. Count checks compare
census tables with the closed forms; exhaustive checks scan S_n and
report the first permutation that violates the property.

"""

from abc import ABC, abstractmethod
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from minmaxtree.action.psi import PsiOperator, psi
from minmaxtree.census.exact import (
    census_exact,
    complement_split,
    count_andre,
    fixed_point_counts,
)
from minmaxtree.data import const
from minmaxtree.data.types import CensusTable, CheckResult, Permutation, TreeVariant
from minmaxtree.perm import complement, iter_permutations
from minmaxtree.tree.builder import build_min12, build_minmax, build_minmax_fast
from minmaxtree.tree.query import check_tree, leaf_positions, shape_signature


@dataclass
class VerifyContext:
    """Shared state of a verification run.

    Attributes
    ----------
    psi : PsiOperator
        The operator under test.
    workers : int
        The number of census worker processes.

    """

    psi: PsiOperator = psi
    workers: int = 1
    _tables: dict = field(default_factory=dict)

    def census(self, n: int, variant: TreeVariant = TreeVariant.MINMAX) -> CensusTable:
        """Return the census table of S_n, computed once per run."""
        key = (n, variant)
        if key not in self._tables:
            self._tables[key] = census_exact(n, variant, workers=self.workers)
        return self._tables[key]


def euler_zigzag(n: int) -> int:
    """Return the Euler zigzag number E_n by the boustrophedon recurrence."""
    row = [1]
    for _ in range(n):
        nxt = [0]
        for x in reversed(row):
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]


class Check(ABC):
    """Base class for verification checks."""

    name: str = "check"

    def __init__(self, max_n: Optional[int] = None) -> None:
        """Initialize the check.

        Parameters
        ----------
        max_n : Optional[int]
            The largest size the check runs at, unbounded if None.

        """
        self.max_n = max_n

    def applies(self, n: int) -> bool:
        """Whether the check runs at size n."""
        return self.max_n is None or n <= self.max_n

    @abstractmethod
    def run(self, n: int, context: VerifyContext) -> CheckResult:
        """Run the check at size n.

        Parameters
        ----------
        n : int
            The permutation size.
        context : VerifyContext
            The shared run state.

        Returns
        -------
        CheckResult
            The outcome.

        """
        raise NotImplementedError

    def result(
        self,
        n: int,
        counterexample: Optional[Permutation] = None,
        detail: str = "",
        **parameters: int,
    ) -> CheckResult:
        """Wrap an outcome, a check passes when no failure is described."""
        passed = counterexample is None and not detail
        return CheckResult(
            name=self.name,
            parameters={"n": n, **parameters},
            passed=passed,
            counterexample=counterexample,
            detail=detail,
        )


class ExhaustiveCheck(Check):
    """A property tested on every permutation of S_n."""

    def run(self, n: int, context: VerifyContext) -> CheckResult:
        """Return the first violation over S_n, if any."""
        for p in iter_permutations(n):
            detail = self.violation(p, context)
            if detail:
                return self.result(n, counterexample=p, detail=detail)
        return self.result(n)

    @abstractmethod
    def violation(self, p: Permutation, context: VerifyContext) -> str:
        """Describe how p violates the property, empty if it does not."""
        raise NotImplementedError


####################################################################################################
# COUNTS
####################################################################################################


class LeafCountCheck(Check):
    """p_i is a leaf in n!/3 permutations for i <= n-2, never at n-1, always at n."""

    name = "leaf-counts"

    def run(self, n: int, context: VerifyContext) -> CheckResult:  # noqa: D102
        table = context.census(n)
        third = table.total // 3
        expected = [third] * (n - 2) + [0, table.total]
        if table.leaf_counts != expected:
            detail = f"leaf counts {table.leaf_counts} != {expected}"
            return self.result(n, detail=detail)
        return self.result(n)


class ChildCountCheck(Check):
    """d_{i,j} = n!/3 for 2 <= i <= n-2 and every j."""

    name = "child-counts"

    def applies(self, n: int) -> bool:  # noqa: D102
        return n >= const.min_corollary_n and super().applies(n)

    def run(self, n: int, context: VerifyContext) -> CheckResult:  # noqa: D102
        table = context.census(n)
        third = table.total // 3
        for i in range(2, n - 1):
            if table.d[i - 1] != [third, third, third]:
                return self.result(n, detail=f"d[{i}] = {table.d[i - 1]}", i=i)
        return self.result(n)


class EdgeCountCheck(Check):
    """Child counts of the first and the last two positions."""

    name = "edge-counts"

    def run(self, n: int, context: VerifyContext) -> CheckResult:  # noqa: D102
        table = context.census(n)
        total = table.total
        third = total // 3
        expected = {
            1: [third, 2 * third, 0],
            n - 1: [0, 2 * third, third],
            n: [total, 0, 0],
        }
        for i, row in expected.items():
            if table.d[i - 1] != row:
                return self.result(n, detail=f"d[{i}] = {table.d[i - 1]} != {row}", i=i)
        return self.result(n)


class VariantEqualityCheck(Check):
    """The min1-min2 census equals the minmax census."""

    name = "variant-equality"

    def run(self, n: int, context: VerifyContext) -> CheckResult:  # noqa: D102
        minmax = context.census(n, TreeVariant.MINMAX)
        min12 = context.census(n, TreeVariant.MIN12)
        if not minmax.same_counts(min12):
            return self.result(n, detail=f"min12 d={min12.d} != minmax d={minmax.d}")
        return self.result(n)


class FixedPointCountCheck(Check):
    """psi_i fixes exactly as many permutations as p_i is a leaf in."""

    name = "fixed-point-counts"

    def run(self, n: int, context: VerifyContext) -> CheckResult:  # noqa: D102
        counts = fixed_point_counts(n, context.psi)
        expected = context.census(n).leaf_counts
        if counts != expected:
            return self.result(n, detail=f"fixed point counts {counts} != {expected}")
        return self.result(n)


class AndreCountCheck(Check):
    """André permutations are counted by the Euler zigzag numbers."""

    name = "andre-counts"

    def run(self, n: int, context: VerifyContext) -> CheckResult:  # noqa: D102
        count = count_andre(n, context.workers)
        expected = euler_zigzag(n)
        if count != expected:
            detail = f"{count} André permutations, expected {expected}"
            return self.result(n, detail=detail)
        return self.result(n)


class ComplementSplitCheck(Check):
    """Leaf counts agree between 1-before-n and n-before-1 permutations."""

    name = "complement-split"

    def run(self, n: int, context: VerifyContext) -> CheckResult:  # noqa: D102
        first, second = complement_split(n, context.workers)
        if first != second:
            return self.result(n, detail=f"1 before n: {first}, n before 1: {second}")
        return self.result(n)


####################################################################################################
# STRUCTURE
####################################################################################################


class StructureCheck(ExhaustiveCheck):
    """Structural invariants of every tree."""

    name = "structure"

    def __init__(
        self, max_n: Optional[int] = None, variant: TreeVariant = TreeVariant.MINMAX
    ) -> None:
        """Initialize the check.

        Parameters
        ----------
        max_n : Optional[int]
            The largest size the check runs at.
        variant : TreeVariant
            The tree variant to inspect.

        """
        super().__init__(max_n)
        self.variant = TreeVariant(variant)
        self.name = f"structure-{self.variant.value}"

    def violation(self, p: Permutation, context: VerifyContext) -> str:  # noqa: ARG002, D102
        if self.variant is TreeVariant.MINMAX:
            tree = build_minmax_fast(p)
        else:
            tree = build_min12(p)
        return ", ".join(check_tree(tree))


class ComplementCheck(ExhaustiveCheck):
    """Complementation keeps the shape and swaps minimum and maximum nodes."""

    name = "complement"

    def violation(self, p: Permutation, context: VerifyContext) -> str:  # noqa: ARG002, D102
        tree = build_minmax_fast(p)
        mirror = build_minmax_fast(complement(p))
        if shape_signature(tree) != shape_signature(mirror):
            return "complement changed the shape"
        if mirror.kinds != tuple(k.flipped() for k in tree.kinds):
            return "complement did not swap node kinds"
        return ""


class BuilderAgreementCheck(ExhaustiveCheck):
    """The sparse-table builders agree with the linear-scan builders."""

    name = "builder-agreement"

    def violation(self, p: Permutation, context: VerifyContext) -> str:  # noqa: ARG002, D102
        if build_minmax_fast(p) != build_minmax(p):
            return "fast minmax builder disagrees"
        if build_min12(p, fast=True) != build_min12(p, fast=False):
            return "fast min12 builder disagrees"
        return ""


####################################################################################################
# ACTION
####################################################################################################


def _positions(n: int) -> Iterator[int]:
    return iter(range(1, n + 1))


class InvolutionCheck(ExhaustiveCheck):
    """psi_i applied twice is the identity."""

    name = "involution"

    def violation(self, p: Permutation, context: VerifyContext) -> str:  # noqa: D102
        for i in _positions(p.n):
            if context.psi(context.psi(p, i), i) != p:
                return f"psi_{i} is not an involution"
        return ""


class FixedPointCheck(ExhaustiveCheck):
    """psi_i fixes p exactly when p_i is a leaf."""

    name = "fixed-points"

    def violation(self, p: Permutation, context: VerifyContext) -> str:  # noqa: D102
        leaves = set(leaf_positions(build_minmax_fast(p)))
        for i in _positions(p.n):
            if (context.psi(p, i) == p) != (i in leaves):
                return f"psi_{i} fixed point does not match the leaf set"
        return ""


class ShapePreservationCheck(ExhaustiveCheck):
    """psi_i keeps the tree shape and flips only the kind at i."""

    name = "shape-preservation"

    def violation(self, p: Permutation, context: VerifyContext) -> str:  # noqa: D102
        tree = build_minmax_fast(p)
        signature = shape_signature(tree)
        for i in _positions(p.n):
            image = build_minmax_fast(context.psi(p, i))
            if shape_signature(image) != signature:
                return f"psi_{i} changed the shape"
            expected = tuple(
                k.flipped() if j == i else k for j, k in enumerate(tree.kinds, 1)
            )
            if image.kinds != expected:
                return f"psi_{i} changed node kinds beyond position {i}"
        return ""


class CommutativityCheck(ExhaustiveCheck):
    """psi_i and psi_j commute."""

    name = "commutativity"

    def violation(self, p: Permutation, context: VerifyContext) -> str:  # noqa: D102
        op = context.psi
        for i, j in combinations(_positions(p.n), 2):
            if op(op(p, i), j) != op(op(p, j), i):
                return f"psi_{i} and psi_{j} do not commute"
        return ""
