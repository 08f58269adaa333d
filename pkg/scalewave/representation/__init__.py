from ..wave_models.request import EvalRequest
from .free_wave import double_factorial, free_wave, free_wave_even, free_wave_odd, iterated_t_operator
from .huygens import HuygensSplit, non_huygens_delta_one, split_huygens
from .multi_d import solve_nd
from .one_d import solve_1d
from .support import SupportReport, check_huygens, check_support


def solve(req: EvalRequest) -> float:
    """u(t, x) by the representation formula of the request's dimension."""
    if req.dim == 1:
        return solve_1d(req)
    return solve_nd(req)


__all__ = [
    "HuygensSplit",
    "SupportReport",
    "check_huygens",
    "check_support",
    "double_factorial",
    "free_wave",
    "free_wave_even",
    "free_wave_odd",
    "iterated_t_operator",
    "non_huygens_delta_one",
    "solve",
    "solve_1d",
    "solve_nd",
    "split_huygens",
]
