import click
from quasifiliform_tp.catalog import make_algebra, list_families
from quasifiliform_tp.cli.common import (
    emit,
    fail,
    family_option,
    finish,
    json_option,
    n_option,
    out_option,
    resolve_family,
)
from quasifiliform_tp.jsonio import export_json
from quasifiliform_tp.reports import check_algebra
from quasifiliform_tp.utils import format_vector

import json


@click.group(name="algebra")
def algebra():
    """Inspect the catalog of quasi-filiform Lie algebras."""
    pass


@algebra.command(name="list")
@json_option
def list_algebras(as_json: bool):
    """List the families with their dimension constraints."""
    families = list_families()
    if as_json:
        click.echo(json.dumps([f.model_dump(mode="json") for f in families], indent=2))
        return
    for info in families:
        click.echo(f"{info.family.value:<6} {info.constraint:<14} {info.description}")


@algebra.command()
@family_option
@n_option
@json_option
@out_option
def show(family: str | None, n: int | None, as_json: bool, out_path: str | None):
    """Print the nonzero brackets of a catalog algebra."""
    family_id = resolve_family(family, n)
    try:
        alg = make_algebra(family_id)
    except Exception as e:
        fail("building algebra", e)
    json_text = export_json(alg)
    if as_json:
        emit(json_text, out_path)
        return
    lines = [f"{alg.name} (dim {alg.dim})"]
    lines += [f"[e{i}, e{j}] = {format_vector(v)}" for (i, j), v in alg.brackets.items()]
    emit("\n".join(lines), out_path, json_text)


@algebra.command()
@family_option
@n_option
@json_option
@out_option
def check(family: str | None, n: int | None, as_json: bool, out_path: str | None):
    """Check the Jacobi identity and that the nilindex is n - 1.

    Exits with code 2 if either check fails.
    """
    family_id = resolve_family(family, n)
    try:
        report = check_algebra(family_id)
    except Exception as e:
        fail("checking algebra", e)
    json_text = report.model_dump_json(indent=2)
    if as_json:
        emit(json_text, out_path)
    else:
        jacobi = "pass" if report.jacobi.passed else f"fail at {report.jacobi.witness.indices}"
        emit(
            f"{report.name}: jacobi {jacobi} ({report.jacobi.checked} triples); "
            f"lower central series {report.lower_central_series}; "
            f"nilindex {report.nilindex} (expected {report.expected_nilindex})",
            out_path,
            json_text,
        )
    finish(report.passed)
