import click
from quasifiliform_tp.catalog import Family, FamilyId
from quasifiliform_tp.settings import Settings
from quasifiliform_tp.utils import parse_n_grid, parse_rational

from fractions import Fraction

EXIT_VERIFICATION_FAILED = 2
EXIT_ERROR = 3


class RationalParamType(click.ParamType):
    name = "P/Q"

    def convert(self, value, param, ctx) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(value)
        except ValueError as e:
            self.fail(str(e), param, ctx)


class GridParamType(click.ParamType):
    name = "CSV"

    def convert(self, value, param, ctx) -> list[int]:
        if isinstance(value, list):
            return value
        try:
            return parse_n_grid(value)
        except ValueError as e:
            self.fail(str(e), param, ctx)


RATIONAL = RationalParamType()
GRID = GridParamType()

family_option = click.option(
    "--family",
    type=click.Choice([f.value for f in Family], case_sensitive=False),
    help="Family tag, e.g. 'g2n1'",
)
n_option = click.option("--n", "n", type=int, help="Dimension; omit for g1_7, g2_9, g3_11")
json_option = click.option("--json", "as_json", is_flag=True, help="Print JSON instead of text")
out_option = click.option(
    "--out",
    "out_path",
    type=click.Path(dir_okay=False, writable=True),
    help="Also write the JSON output to this file",
)


def sampling_options(command):
    """Adds ``--samples``, ``--seed``, ``--bound`` and ``--threads`` to a command."""
    command = click.option(
        "--threads",
        type=click.IntRange(min=1),
        envvar="TPA_THREADS",
        help="Worker processes; defaults to one per CPU",
    )(command)
    command = click.option(
        "--bound",
        type=click.IntRange(min=1),
        envvar="TPA_BOUND",
        help="Bound on sampled numerators and denominators",
    )(command)
    command = click.option("--seed", type=int, envvar="TPA_SEED", help="First sample seed")(
        command
    )
    command = click.option(
        "--samples",
        type=click.IntRange(min=0),
        envvar="TPA_SAMPLES",
        help="Parameter samples per table",
    )(command)
    return command


def settings_from(ctx: click.Context) -> Settings:
    settings = ctx.find_object(Settings)
    return settings if settings is not None else Settings()


def fail(doing: str, e: Exception):
    """Reports an error the way every command does and exits with code 3."""
    click.echo(f"Error {doing}: {str(e)}", err=True)
    raise click.exceptions.Exit(EXIT_ERROR)


def resolve_family(family: str | None, n: int | None) -> FamilyId:
    if family is None:
        raise click.UsageError("Missing option '--family'")
    try:
        return FamilyId.of(family, n)
    except ValueError as e:
        fail("resolving family", e)


def emit(text: str, out_path: str | None = None, json_text: str | None = None):
    """Prints ``text`` and writes ``json_text`` (or ``text``) to ``out_path`` if given."""
    click.echo(text)
    if out_path:
        with open(out_path, "w") as out_file:
            out_file.write((json_text if json_text is not None else text) + "\n")


def finish(passed: bool):
    if not passed:
        raise click.exceptions.Exit(EXIT_VERIFICATION_FAILED)
