from ...wave_models.run_config import CommandName
from ..base import RunCommand


class Command(RunCommand):
    help = "Tabulate the kernels E, K0 and K1 over a (t, x, b, y) grid."
    command = CommandName.EVAL_KERNEL
