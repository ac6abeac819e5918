import click
from quasifiliform_tp.cli.common import (
    GRID,
    emit,
    fail,
    family_option,
    finish,
    json_option,
    n_option,
    out_option,
    resolve_family,
    sampling_options,
    settings_from,
)
from quasifiliform_tp.models import VariantReport
from quasifiliform_tp.reports import grid_family_ids
from quasifiliform_tp.tpa.base import TPVariant
from quasifiliform_tp.tpa.registry import get_amendment, get_variant, list_variants
from quasifiliform_tp.tpa.sweep import CHECKS, sweep, verify_variant

import json


@click.group(name="tpa")
def tpa():
    """Inspect and verify transposed Poisson multiplication tables."""
    pass


def format_table(v: TPVariant) -> list[str]:
    lines = [f"{v.id} ({v.source})"]
    if v.note:
        lines.append(f"  note: {v.note}")
    if v.constraints:
        lines.append(f"  where {', '.join(v.constraint_labels)}")
    for (i, j), entry in v.entries.items():
        products = " + ".join(f"({v.display(expr)})*e{k}" for k, expr in entry.items())
        lines.append(f"  e{i}*e{j} = {products}")
    return lines


def summarize(report: VariantReport) -> str:
    """One line per variant: status, first failing check and witness, amendment status."""

    def status(r: VariantReport) -> str:
        if r.passed:
            return "pass"
        for name in CHECKS:
            outcome = getattr(r, name)
            if not outcome.passed:
                return f"fail {name} at {tuple(outcome.witness.indices)} ({outcome.failed_samples}/{r.samples} samples)"
        return "fail"

    line = f"{report.variant}: printed {status(report)}"
    if report.suspected_erratum:
        line += " [suspected erratum]"
    if report.amendment is not None:
        line += f"; amended {status(report.amendment)}"
    if not report.poisson_leibniz.passed:
        line += "; not Poisson"
    return line


def failures(reports: list[VariantReport], accept_amended: bool = False) -> int:
    """Counts failing printed tables; with ``accept_amended``, only those without a passing amendment."""
    if accept_amended:
        return sum(not r.resolved for r in reports)
    return sum(not r.passed for r in reports)


@tpa.command(name="list")
@family_option
@n_option
def list_tables(family: str | None, n: int | None):
    """List the tables registered for an algebra."""
    family_id = resolve_family(family, n)
    try:
        for key in list_variants(family_id):
            v = get_variant(family_id, key)
            amended = " (amended)" if get_amendment(family_id, key) is not None else ""
            click.echo(f"{v.id}{amended}: {', '.join(v.parameters)}")
    except Exception as e:
        fail("listing tables", e)


@tpa.command()
@family_option
@n_option
@click.option("--variant", "key", required=True, help="Variant key, e.g. 'TP2'")
def show(family: str | None, n: int | None, key: str):
    """Print a printed table and its amendment, if one is registered."""
    family_id = resolve_family(family, n)
    try:
        tables = [get_variant(family_id, key)]
        amended = get_amendment(family_id, key)
    except Exception as e:
        fail("showing table", e)
    if amended is not None:
        tables.append(amended)
    for v in tables:
        click.echo("\n".join(format_table(v)))


@tpa.command()
@family_option
@n_option
@click.option("--variant", "key", help="Variant key; all variants of the algebra if omitted")
@click.option("--all", "verify_all", is_flag=True, help="Verify every algebra on --n-grid")
@click.option("--n-grid", type=GRID, help="Comma-separated dimensions for --all")
@sampling_options
@click.option(
    "--accept-amended",
    is_flag=True,
    help="Treat a failing printed table as passing when its registered amendment passes",
)
@json_option
@out_option
@click.pass_context
def verify(
    ctx: click.Context,
    family: str | None,
    n: int | None,
    key: str | None,
    verify_all: bool,
    n_grid: list[int] | None,
    samples: int | None,
    seed: int | None,
    bound: int | None,
    threads: int | None,
    accept_amended: bool,
    as_json: bool,
    out_path: str | None,
):
    """Verify tables on seeded parameter samples.

    Exits with code 2 if a printed table fails, unless --accept-amended is given and
    its registered amendment passes.
    """
    if verify_all == (family is not None):
        raise click.UsageError("Pass exactly one of --family or --all")
    settings = settings_from(ctx)
    samples = settings.samples if samples is None else samples
    seed = settings.seed if seed is None else seed
    bound = settings.bound if bound is None else bound
    threads = settings.threads if threads is None else threads

    try:
        if verify_all:
            family_ids, _ = grid_family_ids(settings.n_grid if n_grid is None else n_grid)
            reports = sweep(family_ids, samples, seed, bound, threads, settings.max_retries)
        else:
            family_id = resolve_family(family, n)
            keys = [key] if key else list_variants(family_id)
            reports = [
                verify_variant(family_id, k, samples, seed, bound, settings.max_retries)
                for k in keys
            ]
    except click.exceptions.Exit:
        raise
    except Exception as e:
        fail("verifying tables", e)

    json_text = json.dumps([r.model_dump(mode="json") for r in reports], indent=2)
    if as_json:
        emit(json_text, out_path)
    else:
        emit("\n".join(summarize(r) for r in reports), out_path, json_text)
    finish(failures(reports, accept_amended) == 0)
