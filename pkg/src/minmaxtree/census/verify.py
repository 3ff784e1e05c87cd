import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import hydra
import omegaconf
import yaml
from hydra.errors import InstantiationException

from minmaxtree.action.psi import PsiOperator, psi
from minmaxtree.census.checks import (
    AndreCountCheck,
    BuilderAgreementCheck,
    Check,
    ChildCountCheck,
    CommutativityCheck,
    ComplementCheck,
    ComplementSplitCheck,
    EdgeCountCheck,
    FixedPointCheck,
    FixedPointCountCheck,
    InvolutionCheck,
    LeafCountCheck,
    ShapePreservationCheck,
    StructureCheck,
    VariantEqualityCheck,
    VerifyContext,
)
from minmaxtree.data import const
from minmaxtree.data.types import TreeVariant, VerifyReport
from minmaxtree.errors import ConfigError, NTooLargeError, NTooSmallError

logger = logging.getLogger(__name__)


@dataclass
class VerifyConfig:
    """Verify run configuration.

    Attributes
    ----------
    n_max : int
        The largest permutation size checked.
    checks : list[Check]
        The checks to run, the default suite when empty.
    workers : int
        The number of census worker processes.

    """

    n_max: int
    checks: list[Check] = field(default_factory=list)
    workers: int = 1


def default_checks() -> list[Check]:
    """Return the default check suite.

    Count checks run at every size. Exhaustive checks over S_n stop at
    the sizes where a full scan with tree rebuilding stays quick.

    """
    return [
        LeafCountCheck(),
        ChildCountCheck(),
        EdgeCountCheck(),
        StructureCheck(max_n=8),
        StructureCheck(max_n=8, variant=TreeVariant.MIN12),
        ComplementCheck(max_n=8),
        BuilderAgreementCheck(max_n=8),
        VariantEqualityCheck(max_n=8),
        InvolutionCheck(max_n=7),
        FixedPointCheck(max_n=7),
        ShapePreservationCheck(max_n=7),
        CommutativityCheck(max_n=6),
        FixedPointCountCheck(max_n=7),
        AndreCountCheck(max_n=8),
        ComplementSplitCheck(max_n=8),
    ]


def load_checks(path: Path, overrides: Sequence[str] = ()) -> list[Check]:
    """Load a check suite from a YAML config.

    Parameters
    ----------
    path : Path
        The config file, with a `checks` list of `_target_` entries.
    overrides : Sequence[str]
        Dotlist overrides, such as "checks.3.max_n=6". List items are
        addressed by their index.

    Returns
    -------
    list[Check]
        The instantiated checks.

    Raises
    ------
    ConfigError
        If the config cannot be read, an override is malformed or an entry
        does not instantiate to a check.

    """
    try:
        raw_config = omegaconf.OmegaConf.load(path)
        for override in overrides:
            key, sep, value = override.partition("=")
            if not sep or not key:
                msg = f"Override {override!r} is not of the form key=value."
                raise ConfigError(msg)
            omegaconf.OmegaConf.update(raw_config, key, yaml.safe_load(value))
        cfg = hydra.utils.instantiate(raw_config, _convert_="all")
    except (
        OSError,
        IndexError,
        TypeError,
        yaml.YAMLError,
        omegaconf.errors.OmegaConfBaseException,
        InstantiationException,
    ) as error:
        msg = f"Cannot load checks from {path}: {error}"
        raise ConfigError(msg) from error

    checks = list(cfg.get("checks", [])) if isinstance(cfg, dict) else []
    for check in checks:
        if not isinstance(check, Check):
            msg = f"Config entry {check!r} is not a check."
            raise ConfigError(msg)
    return checks


def verify_suite(
    n_max: int,
    checks: Optional[Sequence[Check]] = None,
    psi_operator: Optional[PsiOperator] = None,
    workers: int = 1,
) -> VerifyReport:
    """Run the verification checks for every size from 3 to n_max.

    Parameters
    ----------
    n_max : int
        The largest permutation size, in 3..10.
    checks : Optional[Sequence[Check]]
        The checks to run, the default suite if None.
    psi_operator : Optional[PsiOperator]
        The operator under test, psi if None.
    workers : int
        The number of census worker processes.

    Returns
    -------
    VerifyReport
        One result per check and size, in run order.

    Raises
    ------
    NTooSmallError
        If n_max < 3.
    NTooLargeError
        If n_max > 10.

    """
    if n_max < const.min_census_n:
        msg = f"Verification needs n_max >= {const.min_census_n}, got {n_max}."
        raise NTooSmallError(msg)
    if n_max > const.max_verify_n:
        msg = f"Verification size n_max={n_max} exceeds the limit {const.max_verify_n}."
        raise NTooLargeError(msg)

    if checks is None:
        checks = default_checks()
    context = VerifyContext(psi=psi_operator or psi, workers=workers)

    results = []
    for n in range(const.min_census_n, n_max + 1):
        for check in checks:
            if not check.applies(n):
                continue
            logger.debug("Running %s at n=%d", check.name, n)
            result = check.run(n, context)
            if not result.passed:
                logger.warning(
                    "Check %s failed at n=%d: %s (counterexample %s)",
                    check.name,
                    n,
                    result.detail,
                    result.counterexample,
                )
            results.append(result)

    return VerifyReport(n_max=n_max, results=results)
