import click
from dotenv import find_dotenv, load_dotenv

import logging
import sys

from .commands import algebra, derivations, tpa, verify
from quasifiliform_tp import __version__
from quasifiliform_tp.cli.common import EXIT_ERROR, fail
from quasifiliform_tp.settings import SettingsError, load_settings

LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO}


class ToolGroup(click.Group):
    """Root group that reports usage errors with exit code 3."""

    def make_context(self, *args, **kwargs) -> click.Context:
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = EXIT_ERROR
            raise

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_ERROR
            raise


@click.group(cls=ToolGroup, name="qf-tp")
@click.version_option(__version__)
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for detail")
@click.option(
    "--settings",
    "settings_path",
    type=click.Path(exists=True, dir_okay=False),
    envvar="TPA_SETTINGS",
    help="JSON file replacing the packaged defaults",
)
@click.pass_context
def cli(ctx: click.Context, verbose: int, settings_path: str | None):
    """Exact verification of 1/2-derivations and transposed Poisson structures
    on quasi-filiform Lie algebras of maximum length."""
    load_dotenv(find_dotenv(usecwd=True))
    logging.basicConfig(
        level=LOG_LEVELS.get(verbose, logging.DEBUG),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        ctx.obj = load_settings(settings_path)
    except SettingsError as e:
        fail("loading settings", e)


# Register commands
cli.add_command(algebra.algebra)
cli.add_command(derivations.derivations)
cli.add_command(tpa.tpa)
cli.add_command(verify.verify_all)
cli.add_command(verify.check_json)


if __name__ == "__main__":
    cli()
