"""Command-line entry point: ``scalewave <command> --config <path> [overrides]``."""
import importlib
import logging

import click

from .settings import scalewave_settings
from .wave_models.run_config import CommandName, OutputFormat

COMMAND_MODULES = {name.value: name.value.replace('-', '_') for name in CommandName}


def load_command(name: str):
    module = importlib.import_module(f"scalewave.management.commands.{COMMAND_MODULES[name]}")
    return module.Command()


def common_options(func):
    options = [
        click.option("--config", "config", type=click.Path(dir_okay=False), default=None,
                     help="Flat JSON config file."),
        click.option("--mu", type=float, default=None, help="Damping coefficient."),
        click.option("--nu2", type=float, default=None, help="Mass coefficient nu^2."),
        click.option("--dim", type=int, default=None, help="Space dimension (1, 2 or 3)."),
        click.option("--out", type=click.Path(dir_okay=False), default=None, help="Output file."),
        click.option("--format", "format", type=click.Choice([f.value for f in OutputFormat]), default=None,
                     help="Output format."),
        click.option("--emit-plot/--no-emit-plot", default=None, help="Write a gnuplot script next to the CSV."),
        click.option("--seed", type=int, default=None, help="Sampling seed of the property suite."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@click.group()
@click.option("--log-level", default=None, help="Logging level, defaults to the LOG_LEVEL setting.")
def main(log_level):
    """Semi-analytic solver for the wave equation with scale-invariant damping and mass."""
    logging.basicConfig(
        level=(log_level or scalewave_settings.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _register(name: str):
    command = load_command(name)

    @main.command(name=name, help=command.help)
    @common_options
    @click.pass_context
    def _run(ctx, **options):
        ctx.exit(command.handle(**options))

    return _run


for _name in COMMAND_MODULES:
    _register(_name)


if __name__ == "__main__":
    main()
