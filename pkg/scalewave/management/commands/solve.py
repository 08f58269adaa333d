from ...wave_models.run_config import CommandName
from ..base import RunCommand


class Command(RunCommand):
    help = "Evaluate u(t, x) by the representation formula on a grid of times and points."
    command = CommandName.SOLVE
