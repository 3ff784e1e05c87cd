import logging
from collections import deque
from collections.abc import Iterable

from minmaxtree.action.psi import PsiOperator, check_generators, fixed_positions, psi
from minmaxtree.data import const
from minmaxtree.data.types import GeneratorSet, OrbitRecord, Permutation
from minmaxtree.errors import OrbitTooLargeError

logger = logging.getLogger(__name__)


def orbit(
    p: Permutation, indices: Iterable[int], operator: PsiOperator = psi
) -> OrbitRecord:
    """Close a permutation under a set of psi generators.

    Leaves of the base tree act trivially on every member, since psi
    preserves the tree shape, so only the remaining generators are
    applied during the closure.

    Parameters
    ----------
    p : Permutation
        The base permutation.
    indices : Iterable[int]
        The generator indices, a subset of 1..n.
    operator : PsiOperator
        The single-generator operator.

    Returns
    -------
    OrbitRecord
        The orbit, members in lexicographic order.

    Raises
    ------
    OrbitTooLargeError
        If more than the guarded number of generators are requested.

    """
    generators = check_generators(p.n, indices)
    leaves = set(fixed_positions(p))
    if len(generators) > const.max_orbit_generators:
        msg = (
            f"{len(generators)} generators exceed the orbit guard "
            f"of {const.max_orbit_generators} (up to 2^{len(generators)} members)."
        )
        raise OrbitTooLargeError(msg)
    effective = [i for i in generators if i not in leaves]

    # Breadth-first closure
    seen = {p}
    queue = deque([p])
    while queue:
        current = queue.popleft()
        for i in effective:
            image = operator(current, i)
            if image not in seen:
                seen.add(image)
                queue.append(image)

    logger.debug("Orbit of %s under %s has %d members", p, effective, len(seen))
    return OrbitRecord(
        base=p,
        generators=GeneratorSet.of(generators),
        effective=GeneratorSet.of(effective),
        members=sorted(seen, key=lambda q: q.entries),
    )
