"""
Finite-difference reference solvers.

Second-order leapfrog in time and space for
u_tt - u_xx + mu/(1+t) u_t + nu2/(1+t)^2 u = f on a padded interval with
u = 0 at both ends. The damping term is time-centered, the mass term explicit.
The radial 3-d solver runs the same scheme on U = r u.
"""
import logging
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import CFLViolation, DomainTooSmall
from .wave_models.fields import CauchyData
from .wave_models.grid import Grid1D, SolutionSlice
from .wave_models.params import ModelParams

logger = logging.getLogger(__name__)

CFL_LIMIT = 0.9


def laplacian_1d(u: np.ndarray, dx: float) -> np.ndarray:
    """Second difference on the interior nodes."""
    return (u[2:] - 2.0 * u[1:-1] + u[:-2]) / dx ** 2


def _check_grid(grid: Grid1D, times: Sequence[float], report_interval: Optional[Tuple[float, float]]):
    if grid.dt > CFL_LIMIT * grid.dx:
        raise CFLViolation(f"dt = {grid.dt} exceeds {CFL_LIMIT} * dx = {CFL_LIMIT * grid.dx}")
    t_max = max(times)
    if t_max > grid.t_end * (1.0 + 1e-12):
        raise ValueError(f"requested time {t_max} beyond t_end = {grid.t_end}")
    if report_interval is not None:
        lo, hi = report_interval
        if grid.x_min > lo - t_max or grid.x_max < hi + t_max:
            raise DomainTooSmall(
                f"[{grid.x_min}, {grid.x_max}] does not contain the cone of dependence "
                f"[{lo - t_max}, {hi + t_max}] of the reported points"
            )


def _march(u0: np.ndarray, v0: np.ndarray, source: Callable[[float], np.ndarray],
           params: ModelParams, dx: float, dt: float, times: Sequence[float]) -> List[np.ndarray]:
    """Leapfrog time stepping; returns the solution at each requested time, linearly
    interpolated between the two bracketing steps."""
    mu, nu2 = params.mu, params.nu2
    dt2 = dt * dt
    order = sorted(range(len(times)), key=lambda i: times[i])
    out: List[Optional[np.ndarray]] = [None] * len(times)
    pending = list(order)

    def emit(step: int, u_now: np.ndarray, u_next: np.ndarray):
        while pending:
            i = pending[0]
            theta = times[i] / dt - step
            if theta > 1.0 + 1e-9:
                return
            if theta <= 1e-9:
                out[i] = u_now.copy()
            elif theta >= 1.0 - 1e-9:
                out[i] = u_next.copy()
            else:
                out[i] = u_now + theta * (u_next - u_now)
            pending.pop(0)

    u_prev = np.array(u0, dtype=float)
    u = np.zeros_like(u_prev)
    f0 = source(0.0)
    u[1:-1] = (u_prev[1:-1] + dt * v0[1:-1]
               + 0.5 * dt2 * (laplacian_1d(u_prev, dx) - mu * v0[1:-1] - nu2 * u_prev[1:-1] + f0[1:-1]))
    emit(0, u_prev, u)

    step = 1
    while pending:
        t_n = step * dt
        c = mu * dt / (2.0 * (1.0 + t_n))
        m = nu2 / (1.0 + t_n) ** 2
        f = source(t_n)
        u_next = np.zeros_like(u)
        u_next[1:-1] = (2.0 * u[1:-1] - (1.0 - c) * u_prev[1:-1]
                        + dt2 * (laplacian_1d(u, dx) - m * u[1:-1] + f[1:-1])) / (1.0 + c)
        emit(step, u, u_next)
        u_prev, u = u, u_next
        step += 1

    logger.debug("leapfrog: %d nodes, %d steps", u0.size, step)
    return out


def fd_solve_1d(data: CauchyData, params: ModelParams, grid: Grid1D, times: Sequence[float] = None,
                report_interval: Tuple[float, float] = None) -> List[SolutionSlice]:
    """
    Finite-difference solution on ``grid`` at ``times`` (default: t_end).

    :raises CFLViolation: dt > 0.9 dx
    :raises DomainTooSmall: the cone of dependence of ``report_interval`` leaves the grid
    """
    if data.dim != 1:
        raise ValueError("fd_solve_1d needs one-dimensional data")
    times = [grid.t_end] if times is None else [float(t) for t in times]
    _check_grid(grid, times, report_interval)

    nodes = grid.nodes
    u0 = np.zeros(nodes.shape) if data.u0.is_zero else data.u0(nodes)
    v0 = np.zeros(nodes.shape) if data.u1.is_zero else data.u1(nodes)
    if data.f.is_zero:
        source = lambda t: np.zeros(nodes.shape)
    else:
        source = lambda t: np.broadcast_to(data.f(t, nodes), nodes.shape)

    values = _march(u0, v0, source, params, grid.dx, grid.dt, times)
    return [SolutionSlice(t=t, values=v) for t, v in zip(times, values)]


def _radial_profile(field, r: np.ndarray) -> np.ndarray:
    points = np.zeros(r.shape + (3,))
    points[..., 0] = np.abs(r)
    return field(points)


def fd_solve_radial_3d(data: CauchyData, params: ModelParams, grid: Grid1D, times: Sequence[float] = None,
                       report_interval: Tuple[float, float] = None) -> List[SolutionSlice]:
    """
    Radially symmetric 3-d solution u(t, r) on the nodes of ``grid`` (x_min = 0).

    U = r u solves the one-dimensional equation with source r f, odd in r; it is
    marched on [-r_max, r_max] and u = U / r is recovered, with u(t, 0) from the
    even parabola through the first two interior nodes.
    """
    if data.dim != 3:
        raise ValueError("fd_solve_radial_3d needs three-dimensional radial data")
    if grid.x_min != 0.0:
        raise ValueError("radial grid must start at r = 0")
    times = [grid.t_end] if times is None else [float(t) for t in times]
    _check_grid(grid, times, None)
    if report_interval is not None and grid.x_max < report_interval[1] + max(times):
        raise DomainTooSmall(f"r_max = {grid.x_max} is below {report_interval[1] + max(times)}")

    nr = grid.nx
    r = grid.dx * np.arange(-(nr - 1), nr, dtype=float)
    U0 = np.zeros(r.shape) if data.u0.is_zero else r * _radial_profile(data.u0, r)
    V0 = np.zeros(r.shape) if data.u1.is_zero else r * _radial_profile(data.u1, r)
    if data.f.is_zero:
        source = lambda t: np.zeros(r.shape)
    else:
        def source(t):
            points = np.zeros(r.shape + (3,))
            points[..., 0] = np.abs(r)
            return r * np.broadcast_to(data.f(t, points), r.shape)

    values = _march(U0, V0, source, params, grid.dx, grid.dt, times)

    radii = r[nr - 1:]
    slices = []
    for t, U in zip(times, values):
        U = U[nr - 1:]
        u = np.empty(nr)
        u[1:] = U[1:] / radii[1:]
        # u ~ alpha + beta r^2 through r = dx and r = 2 dx
        u[0] = (4.0 * u[1] - u[2]) / 3.0
        slices.append(SolutionSlice(t=t, values=u))
    return slices
