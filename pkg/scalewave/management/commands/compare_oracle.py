import click

from ...harness.runner import EXIT_OK
from ...wave_models.run_config import CommandName
from ..base import RunCommand


class Command(RunCommand):
    help = "Compare the representation formula with the finite-difference oracle (dim 1, radial dim 3)."
    command = CommandName.COMPARE_ORACLE

    def report(self, config, result):
        summary = result.summary
        msg = (f"max abs err {summary['max_abs_err']:.3e}, max rel err {summary['max_rel_err']:.3e} "
               f"(tolerance {summary['tolerance']:.1e})")
        click.secho(msg, fg="green" if result.exit_code == EXIT_OK else "red")
