import click

from ...wave_models.run_config import CommandName
from ..base import RunCommand


class Command(RunCommand):
    help = "Run the kernel and hypergeometric identity checks for the configured mu, nu2."
    command = CommandName.PROPERTY_SUITE

    def report(self, config, result):
        for row in result.table.itertuples(index=False):
            line = f"{row.check}: max error {row.max_error:.3e} (tolerance {row.tolerance:.1e})"
            if row.passed:
                click.secho(f"PASS {line}", fg="green")
            else:
                click.secho(f"FAIL {line}", fg="red")
