"""
Command plumbing for the CLI: every sub-command is a ``Command`` class in
``scalewave.management.commands.<name>`` with a ``help`` text, run through
``RunCommand.handle`` and echoed with click.
"""
import json
import logging
from typing import Any, Dict, Optional

import click
from pydantic import ValidationError

from ..exceptions import ConfigError
from ..harness.runner import EXIT_CONFIG_ERROR, RunResult, run
from ..wave_models.run_config import CommandName, RunConfig

logger = logging.getLogger(__name__)


def load_config(command: CommandName, path: Optional[str], overrides: Dict[str, Any]) -> RunConfig:
    """
    Flat JSON config file, then flag overrides (None means not given), validated into a RunConfig.

    :raises ConfigError: unreadable file or invalid values
    """
    values: Dict[str, Any] = {}
    if path:
        try:
            with open(path, "r", encoding="utf-8") as f:
                values = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config {path}: {e}") from e
        if not isinstance(values, dict):
            raise ConfigError(f"config {path} must hold a JSON object")
    values.update({k: v for k, v in overrides.items() if v is not None})
    values["command"] = command.value
    try:
        return RunConfig.parse_obj(values)
    except ValidationError as e:
        raise ConfigError(str(e)) from e


class RunCommand:
    """A command backed by the batch runner."""
    command: CommandName
    help = ""

    def handle(self, config: Optional[str] = None, **overrides) -> int:
        try:
            run_config = load_config(self.command, config, overrides)
        except ConfigError as e:
            click.secho(f"config error: {e}", fg="red", err=True)
            return EXIT_CONFIG_ERROR

        result = run(run_config)
        if result.error is not None:
            click.secho(result.error, fg="red", err=True)
            return result.exit_code

        self.report(run_config, result)
        for path in result.artifacts:
            click.echo(f"wrote {path}")
        return result.exit_code

    def report(self, config: RunConfig, result: RunResult):
        click.secho(f"{self.command.value}: {len(result.table)} rows", fg="green")
