import logging
from collections.abc import Iterator
from dataclasses import asdict
from pathlib import Path
from typing import Any, Literal, Optional, TextIO

import click

from minmaxtree.action.orbit import orbit as orbit_of
from minmaxtree.action.psi import fixed_positions
from minmaxtree.action.psi import psi as apply_psi
from minmaxtree.census.estimate import estimate_leaf_probabilities
from minmaxtree.census.exact import CensusConfig, census_exact, count_andre
from minmaxtree.census.verify import VerifyConfig, load_checks, verify_suite
from minmaxtree.data import const
from minmaxtree.data.parse.permutation import parse_lines, parse_permutation
from minmaxtree.data.types import GeneratorSet, Permutation, TreeVariant
from minmaxtree.data.write.ascii import render_ascii
from minmaxtree.data.write.dot import export_dot
from minmaxtree.data.write.table import (
    tree_to_json,
    write_census,
    write_estimate,
    write_orbit,
    write_report,
)
from minmaxtree.errors import MinMaxTreeError
from minmaxtree.perm import format_permutation
from minmaxtree.tree.builder import build_tree

EXIT_VERIFY_FAILED = 3


class InputError(click.ClickException):
    """A domain error reported as a usage failure."""

    exit_code = 2


class MinMaxTreeGroup(click.Group):
    """Command group that reports domain errors with exit status 2."""

    def invoke(self, ctx: click.Context) -> Any:  # noqa: D102
        try:
            return super().invoke(ctx)
        except MinMaxTreeError as e:
            raise InputError(str(e)) from e


def read_permutations(perm: Optional[str], stdin: bool) -> Iterator[Permutation]:
    """Yield the permutation argument, or one permutation per stdin line."""
    if stdin:
        yield from parse_lines(click.get_text_stream("stdin"))
        return
    if perm is None:
        msg = "Missing permutation, pass it as an argument or use --stdin."
        raise click.UsageError(msg)
    yield parse_permutation(perm)


def emit(text: str, output: Optional[TextIO]) -> None:
    """Write command output, which always ends with a newline."""
    click.echo(text, file=output, nl=False)


variant_option = click.option(
    "--variant",
    type=click.Choice([v.value for v in TreeVariant]),
    help="The tree variant. Default is minmax.",
    default=TreeVariant.MINMAX.value,
)
workers_option = click.option(
    "--workers",
    type=click.IntRange(min=1),
    help=f"The number of worker processes. Default is ${const.workers_env} or 1.",
    envvar=const.workers_env,
    default=1,
)
output_option = click.option(
    "--output",
    type=click.File("w"),
    help="Write to this file instead of stdout.",
    default="-",
)
stdin_option = click.option(
    "--stdin",
    is_flag=True,
    help="Read one permutation per line from stdin.",
)


@click.group(cls=MinMaxTreeGroup)
@click.option("--verbose", is_flag=True, help="Log debug messages to stderr.")
def cli(verbose: bool = False) -> None:
    """Minmax trees of permutations and their involutions."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


@cli.command()
@click.argument("perm", required=False)
@variant_option
@click.option(
    "--format",
    "fmt",
    type=click.Choice(const.tree_formats),
    help="The output format. Default is text.",
    default="text",
)
@stdin_option
@output_option
def tree(
    perm: Optional[str],
    variant: str = "minmax",
    fmt: Literal["text", "json", "dot"] = "text",
    stdin: bool = False,
    output: Optional[TextIO] = None,
) -> None:
    """Print the tree of a permutation."""
    writers = {"text": render_ascii, "json": tree_to_json, "dot": export_dot}
    for p in read_permutations(perm, stdin):
        emit(writers[fmt](build_tree(p, TreeVariant(variant))), output)


@cli.command()
@click.argument("args", nargs=-1, required=True, metavar="[PERM] I")
@stdin_option
@output_option
def psi(
    args: tuple[str, ...], stdin: bool = False, output: Optional[TextIO] = None
) -> None:
    """Apply psi_I to a permutation.

    The permutation is omitted with --stdin, then psi_I is applied to
    every input line.

    """
    expected = 1 if stdin else 2
    if len(args) != expected:
        msg = f"Expected {expected} argument(s), got {len(args)}."
        raise click.UsageError(msg)
    try:
        i = int(args[-1])
    except ValueError:
        msg = f"Invalid generator index {args[-1]!r}."
        raise click.UsageError(msg) from None

    perm = None if stdin else args[0]
    for p in read_permutations(perm, stdin):
        emit(format_permutation(apply_psi(p, i)) + "\n", output)


@cli.command()
@click.argument("perm")
@click.option(
    "--gens",
    type=str,
    help="Comma separated generator indices. Default is every position.",
    default=None,
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    help="The output format. Default is text.",
    default="text",
)
@output_option
def orbit(
    perm: str,
    gens: Optional[str] = None,
    fmt: Literal["text", "json"] = "text",
    output: Optional[TextIO] = None,
) -> None:
    """List the orbit of a permutation under psi generators."""
    p = parse_permutation(perm)
    if gens is None:
        indices = GeneratorSet.full(p.n)
    else:
        try:
            indices = [int(g) for g in gens.split(",") if g.strip()]
        except ValueError:
            msg = f"Invalid generator list {gens!r}."
            raise click.UsageError(msg) from None
    emit(write_orbit(orbit_of(p, indices), fmt), output)


@cli.command()
@click.argument("perm", required=False)
@stdin_option
@output_option
def fixed(
    perm: Optional[str], stdin: bool = False, output: Optional[TextIO] = None
) -> None:
    """Print the positions fixed by psi, which are the leaves."""
    for p in read_permutations(perm, stdin):
        emit(" ".join(str(i) for i in fixed_positions(p)) + "\n", output)


@cli.command()
@click.argument("n", type=int)
@variant_option
@workers_option
@click.option(
    "--format",
    "fmt",
    type=click.Choice(const.table_formats),
    help="The output format. Default is text.",
    default="text",
)
@click.option(
    "--allow_large",
    "--allow-large",
    is_flag=True,
    help=f"Allow sizes up to {const.max_exact_n}.",
)
@output_option
def census(
    n: int,
    variant: str = "minmax",
    workers: int = 1,
    fmt: Literal["text", "json", "csv"] = "text",
    allow_large: bool = False,
    output: Optional[TextIO] = None,
) -> None:
    """Count leaves and children per position over all permutations of size N."""
    config = CensusConfig(
        n=n, variant=TreeVariant(variant), workers=workers, allow_large=allow_large
    )
    emit(write_census(census_exact(**asdict(config)), fmt), output)


@cli.command()
@click.argument("n", type=int)
@click.argument("trials", type=click.IntRange(min=1))
@click.option(
    "--seed",
    type=click.IntRange(0, (1 << 64) - 1),
    help="The 64-bit generator seed.",
    required=True,
)
@click.option(
    "--stream",
    type=click.IntRange(min=0),
    help="The generator stream. Default is 0.",
    default=0,
)
@variant_option
@click.option(
    "--format",
    "fmt",
    type=click.Choice(const.table_formats),
    help="The output format. Default is text.",
    default="text",
)
@output_option
def sample(
    n: int,
    trials: int,
    seed: int,
    stream: int = 0,
    variant: str = "minmax",
    fmt: Literal["text", "json", "csv"] = "text",
    output: Optional[TextIO] = None,
) -> None:
    """Estimate leaf probabilities from TRIALS random permutations of size N."""
    table = estimate_leaf_probabilities(
        n, trials, seed, stream=stream, variant=TreeVariant(variant)
    )
    emit(write_estimate(table, fmt), output)


@cli.command()
@click.argument("n_max", type=int)
@click.argument("overrides", nargs=-1)
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="A YAML file listing the checks to run. Default is the built-in suite.",
    default=None,
)
@workers_option
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    help="The output format. Default is text.",
    default="text",
)
@output_option
@click.pass_context
def verify(
    ctx: click.Context,
    n_max: int,
    overrides: tuple[str, ...] = (),
    config: Optional[Path] = None,
    workers: int = 1,
    fmt: Literal["text", "json"] = "text",
    output: Optional[TextIO] = None,
) -> None:
    """Check every count and invariant for sizes 3 to N_MAX.

    OVERRIDES are dotlist entries applied to the --config file, such as
    checks.3.max_n=6.

    """
    if overrides and config is None:
        msg = "Overrides need a --config file."
        raise click.UsageError(msg)

    checks = load_checks(config, overrides) if config is not None else []
    run = VerifyConfig(n_max=n_max, checks=checks, workers=workers)
    report = verify_suite(run.n_max, run.checks or None, workers=run.workers)
    emit(write_report(report, fmt), output)
    if not report.passed:
        ctx.exit(EXIT_VERIFY_FAILED)


@cli.command()
@click.argument("n", type=click.IntRange(min=1))
@workers_option
def andre(n: int, workers: int = 1) -> None:
    """Count the André permutations of size N."""
    click.echo(count_andre(n, workers))


if __name__ == "__main__":
    cli()
