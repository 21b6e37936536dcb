import logging
import sys
from enum import Enum
from pathlib import Path
from typing import Optional

import typer
from pydantic import ValidationError
from sympy import primerange

from .config import OracleBudget, load_budget
from .counting import count_report
from .cycles import cycle_index, cycle_index_direct
from .exceptions import BudgetExceededError, InvalidPrimeError
from .helpers import (
    OutputFormat,
    p_engine,
    render_count,
    render_table,
    render_verification,
)
from .numth import require_prime
from .project import ExportFormat, RepresentativeExport
from .schema import GroupTag
from .verify import verify_formulas

app = typer.Typer(help="Count Cayley digraphs of the dicyclic group T_4p up to isomorphism.")


class GroupChoice(str, Enum):
    ALPHA = "alpha"
    FULL = "full"

    @property
    def tag(self) -> GroupTag:
        return GroupTag.ALPHA_FAMILY if self == GroupChoice.ALPHA else GroupTag.FULL_AUT


def prime_callback(value: int) -> int:
    try:
        return require_prime(value)
    except InvalidPrimeError as exc:
        raise typer.BadParameter(str(exc))


def _budget(
    config: Optional[Path], max_work: Optional[int], partitions: Optional[int]
) -> OracleBudget:
    try:
        return load_budget(config, max_work=max_work, partitions=partitions)
    except (FileNotFoundError, ValidationError) as exc:
        raise typer.BadParameter(str(exc))


def _check_degree_option(p: int, k: Optional[int]) -> None:
    if k is not None and not 0 <= k <= 4 * p - 1:
        raise typer.BadParameter(f"k must lie in 0..{4 * p - 1}", param_hint="--k")


P_OPTION = typer.Option(..., "--p", callback=prime_callback, help="A prime.")
FORMAT_OPTION = typer.Option(OutputFormat.TEXT, "--format", help="Output format.")
BUDGET_OPTION = typer.Option(
    None, "--budget", help="Largest admissible 2^n * |group| for an orbit sweep."
)
PARTITIONS_OPTION = typer.Option(
    None, "--partitions", help="Sweep this many disjoint bitmask ranges in parallel."
)
CONFIG_OPTION = typer.Option(None, "--config", help="YAML file with oracle budget settings.")


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr."),
):
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
        )


@app.command()
def count(
    p: int = P_OPTION,
    connected: bool = typer.Option(False, "--connected", help="Count connected digraphs only."),
    by_degree: bool = typer.Option(
        False, "--by-degree", help="Print the counts for every out-degree 0 .. 4p-1."
    ),
    fmt: OutputFormat = FORMAT_OPTION,
    group: Optional[GroupChoice] = typer.Option(
        None, "--group", help="For p=2: report only this automorphism group."
    ),
    k: Optional[int] = typer.Option(None, "--k", help="Only digraphs of this out-degree."),
):
    """
    Count dicirculant digraphs of order 4p up to isomorphism.
    """
    _check_degree_option(p, k)
    try:
        report = count_report(p)
    except BudgetExceededError as exc:
        typer.echo(f"Error: {exc}", err=True)
        raise typer.Exit(2)
    typer.echo(
        render_count(
            report,
            fmt,
            connected=connected,
            by_degree=by_degree,
            group_tag=group.tag if group is not None else None,
            k=k,
        )
    )


@app.command()
def table(
    p_max: int = typer.Option(11, "--p-max", help="Largest prime to include."),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """
    Connected counts by out-degree, one row per prime up to --p-max.
    """
    if p_max < 2:
        raise typer.BadParameter("--p-max must be at least 2", param_hint="--p-max")
    reports = [count_report(int(p)) for p in primerange(2, p_max + 1)]
    typer.echo(render_table(reports, fmt))


@app.command()
def verify(
    p: int = P_OPTION,
    budget: Optional[int] = BUDGET_OPTION,
    partitions: Optional[int] = PARTITIONS_OPTION,
    config: Optional[Path] = CONFIG_OPTION,
):
    """
    Check every formula for p against exhaustive orbit sweeps.  Exits 1 on a
    mismatch.
    """
    oracle_budget = _budget(config, budget, partitions)
    try:
        report = verify_formulas(p, oracle_budget)
    except BudgetExceededError as exc:
        typer.echo(f"Error: {exc}", err=True)
        raise typer.Exit(2)
    typer.echo(render_verification(report))
    if not report.passed:
        raise typer.Exit(1)


@app.command("cycle-index")
def cycle_index_command(p: int = P_OPTION):
    """
    Print the cycle index of the automorphism group acting on T_4p - {e}.
    """
    if p == 2:
        typer.echo("# p=2: cycle index of the 8-member alpha-family, a proper subgroup of Aut(Q_8)")
        poly = cycle_index_direct(2)
    else:
        poly = cycle_index(p)
    typer.echo(poly.render())
    terms = len(poly)
    typer.echo(f"# {terms} {p_engine.plural('term', terms)}")
    typer.echo(f"# coefficient sum: {poly.coefficient_sum()}")
    typer.echo(f"# value at 2: {poly.evaluate(lambda k: 2)}")


@app.command()
def export(
    p: int = P_OPTION,
    k: Optional[int] = typer.Option(None, "--k", help="Only connection sets of this size."),
    connected: bool = typer.Option(False, "--connected", help="Only connected digraphs."),
    fmt: ExportFormat = typer.Option(ExportFormat.ARCLIST, "--format", help="File format."),
    out_dir: Path = typer.Option(Path("."), "--out-dir", help="Directory for the files."),
    group: GroupChoice = typer.Option(GroupChoice.ALPHA, "--group", help="Automorphism group."),
    budget: Optional[int] = BUDGET_OPTION,
    partitions: Optional[int] = PARTITIONS_OPTION,
    config: Optional[Path] = CONFIG_OPTION,
):
    """
    Write the Cayley digraph of every orbit representative to --out-dir.
    """
    _check_degree_option(p, k)
    oracle_budget = _budget(config, budget, partitions)
    try:
        written = RepresentativeExport(
            out_dir, p, k, connected, fmt, oracle_budget, group_tag=group.tag
        ).generate()
    except (BudgetExceededError, ValueError) as exc:
        typer.echo(f"Error: {exc}", err=True)
        raise typer.Exit(2)
    typer.echo(f"wrote {len(written)} {p_engine.plural('file', len(written))} to {out_dir}")
