import click
from quasifiliform_tp.catalog import (
    FIXED_DIMENSIONS,
    MINIMUM_DIMENSIONS,
    FamilyId,
    make_algebra,
    valid_dimensions,
)
from quasifiliform_tp.cli.common import (
    RATIONAL,
    emit,
    fail,
    family_option,
    finish,
    json_option,
    n_option,
    out_option,
    resolve_family,
    settings_from,
)
from quasifiliform_tp.derivations import (
    DerivationProblem,
    image,
    solve_derivation_space,
    verify_theorem,
)
from quasifiliform_tp.jsonio import export_json
from quasifiliform_tp.utils import format_rational, format_vector

from fractions import Fraction
import json


@click.group(name="derivations")
def derivations():
    """Solve and verify delta-derivation spaces."""
    pass


@derivations.command()
@family_option
@n_option
@click.option(
    "--delta",
    type=RATIONAL,
    default="1/2",
    show_default=True,
    help="Scalar of the identity; 1 gives ordinary derivations",
)
@json_option
@out_option
def solve(
    family: str | None, n: int | None, delta: Fraction, as_json: bool, out_path: str | None
):
    """Compute the canonical basis of the delta-derivation space of an algebra."""
    family_id = resolve_family(family, n)
    try:
        space = solve_derivation_space(
            DerivationProblem(algebra=make_algebra(family_id), delta=delta)
        )
    except Exception as e:
        fail("solving derivations", e)
    json_text = export_json(space)
    if as_json:
        emit(json_text, out_path)
        return
    lines = [f"{space.name}: {format_rational(delta)}-derivations, dimension {space.dim}"]
    for index, m in enumerate(space.maps(), start=1):
        lines.append(f"phi_{index}:")
        for j in range(1, space.algebra_dim + 1):
            v = image(m, j)
            if v:
                lines.append(f"  e{j} -> {format_vector(v)}")
    emit("\n".join(lines), out_path, json_text)


@derivations.command()
@family_option
@n_option
@click.option("--all", "verify_all", is_flag=True, help="Verify every family up to --n-max")
@click.option("--n-max", type=click.IntRange(min=1), help="Largest dimension for --all")
@json_option
@out_option
@click.pass_context
def verify(
    ctx: click.Context,
    family: str | None,
    n: int | None,
    verify_all: bool,
    n_max: int | None,
    as_json: bool,
    out_path: str | None,
):
    """Compare solved 1/2-derivation spaces with their closed forms.

    Exits with code 2 if any space differs.
    """
    if verify_all == (family is not None):
        raise click.UsageError("Pass exactly one of --family or --all")
    if verify_all:
        n_max = n_max or settings_from(ctx).n_max
        family_ids = [
            FamilyId.of(f, dim)
            for f in list(MINIMUM_DIMENSIONS) + list(FIXED_DIMENSIONS)
            for dim in valid_dimensions(f, n_max)
        ]
    else:
        family_ids = [resolve_family(family, n)]

    try:
        reports = [verify_theorem(family_id) for family_id in family_ids]
    except Exception as e:
        fail("verifying derivations", e)
    json_text = json.dumps([r.model_dump(mode="json") for r in reports], indent=2)
    if as_json:
        emit(json_text, out_path)
    else:
        lines = []
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            lines.append(
                f"{r.family} n={r.n}: solved {r.solved_dim}, predicted {r.predicted_dim} {status}"
            )
        emit("\n".join(lines), out_path, json_text)
    finish(all(r.passed for r in reports))
