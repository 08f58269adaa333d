import click

from ...wave_models.run_config import CommandName
from ..base import RunCommand


class Command(RunCommand):
    help = "Map |u| over the (t, |x|) plane for support and Huygens analysis."
    command = CommandName.HUYGENS_SCAN

    def report(self, config, result):
        super().report(config, result)
        summary = result.summary
        if "support_radius" not in summary:
            click.secho("data support unknown, cone summary skipped", fg="yellow")
            return
        click.echo(f"max |u| outside the forward cone: {summary['max_abs_outside_cone']:.3e}")
        click.echo(f"max |u| inside the backward cone: {summary['max_abs_inside_backward_cone']:.3e}")
