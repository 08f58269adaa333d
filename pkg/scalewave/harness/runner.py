"""
Batch evaluation behind the CLI: one handler per command, each turning a RunConfig
into a table plus a summary, and a run() that maps failures to exit codes and
writes the artifacts.
"""
import logging
import math
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ValidationError

from ..exceptions import ConfigError, NumericError, ParameterError
from ..fd_oracle import fd_solve_1d, fd_solve_radial_3d
from ..kernels import kernel_dE_db, kernel_E, make_point
from ..properties import run_property_suite
from ..representation import solve
from ..wave_models.grid import Grid1D
from ..wave_models.params import ModelParams, make_params
from ..wave_models.request import EvalRequest
from ..wave_models.run_config import (
    BumpSpec,
    CommandName,
    ConstantSpec,
    GaussianSpec,
    OutputFormat,
    RunConfig,
    ZeroSpec,
)
from .builtins import build_data
from .output import write_csv, write_gnuplot, write_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_NUMERIC_ERROR = 3
EXIT_CHECK_FAILED = 4

Outcome = Tuple[pd.DataFrame, Dict[str, Any], bool]


class RunResult(BaseModel):
    exit_code: int
    table: Any = None
    summary: Dict[str, Any] = {}
    artifacts: List[str] = []
    error: Optional[str] = None

    class Config:
        arbitrary_types_allowed = True


def _space_columns(dim: int) -> List[str]:
    return [f"x{i + 1}" for i in range(dim)]


def eval_kernel(config: RunConfig, params: ModelParams) -> Outcome:
    rows = []
    for t in config.t:
        for point in config.points:
            x = point[0]
            for b in config.b:
                for y in config.y:
                    if not (0.0 <= b <= t and abs(y - x) <= t - b):
                        continue
                    p = make_point(t, x, b, y)
                    at_zero = b == 0.0
                    rows.append({
                        't': t, 'x': x, 'b': b, 'y': y,
                        'E': kernel_E(p, params),
                        'K0': -kernel_dE_db(p, params) if at_zero else math.nan,
                        'K1': kernel_E(p, params) if at_zero else math.nan,
                    })
    if not rows:
        raise ConfigError("no (t, x, b, y) combination lies in the characteristic triangle")
    table = pd.DataFrame(rows, columns=['t', 'x', 'b', 'y', 'E', 'K0', 'K1'])
    return table, {'rows': len(rows)}, True


def solve_grid(config: RunConfig, params: ModelParams) -> Outcome:
    data = build_data(config)
    rows = []
    for t in config.t:
        for point in config.points:
            u = solve(EvalRequest(t=t, x=point, data=data, params=params, quad=config.quad))
            rows.append((t,) + point + (u,))
    table = pd.DataFrame(rows, columns=['t'] + _space_columns(config.dim) + ['u'])
    return table, {'rows': len(rows)}, True


def _check_radial(config: RunConfig):
    for name in ('u0', 'u1', 'f'):
        spec = getattr(config, name)
        radial = isinstance(spec, (BumpSpec, ConstantSpec, ZeroSpec)) or (
            isinstance(spec, GaussianSpec) and not np.any(np.asarray(spec.center, dtype=float))
        )
        if not radial:
            raise ConfigError(f"compare-oracle in dim 3 needs radial data, {name} is not")


def _oracle_values(config: RunConfig, params: ModelParams, data) -> Dict[float, Callable]:
    t_max = max(config.t)
    if config.dim == 1:
        xs = [p[0] for p in config.points]
        lo, hi = min(xs), max(xs)
        pad = t_max + config.oracle_padding
        grid = Grid1D.from_spacing(lo - pad, hi + pad, config.oracle_dx, t_max, cfl=config.oracle_cfl)
        slices = fd_solve_1d(data, params, grid, times=config.t, report_interval=(lo, hi))
        return {s.t: (lambda point, s=s: float(s.sample(grid.nodes, point[0]))) for s in slices}

    if config.dim == 3:
        _check_radial(config)
        radii = [float(np.linalg.norm(p)) for p in config.points]
        r_max = max(radii) + t_max + config.oracle_padding
        grid = Grid1D.from_spacing(0.0, r_max, config.oracle_dx, t_max, cfl=config.oracle_cfl)
        slices = fd_solve_radial_3d(data, params, grid, times=config.t, report_interval=(0.0, max(radii)))
        return {s.t: (lambda point, s=s: float(s.sample(grid.nodes, np.linalg.norm(point)))) for s in slices}

    raise ConfigError("compare-oracle supports dim 1 and radial dim 3")


def compare_oracle(config: RunConfig, params: ModelParams) -> Outcome:
    data = build_data(config)
    oracle = _oracle_values(config, params, data)
    rows = []
    for t in config.t:
        for point in config.points:
            u_formula = solve(EvalRequest(t=t, x=point, data=data, params=params, quad=config.quad))
            rows.append((t,) + point + (u_formula, oracle[float(t)](point)))
    columns = ['t'] + _space_columns(config.dim) + ['u_formula', 'u_oracle']
    table = pd.DataFrame(rows, columns=columns)
    table['abs_err'] = (table['u_formula'] - table['u_oracle']).abs()
    # relative to the largest oracle value, so near-zero tails do not dominate
    scale = float(table['u_oracle'].abs().max())
    table['rel_err'] = table['abs_err'] / scale if scale > 0 else table['abs_err']
    max_rel = float(table['rel_err'].max())
    passed = max_rel <= config.oracle_tolerance
    summary = {
        'max_abs_err': float(table['abs_err'].max()),
        'max_rel_err': max_rel,
        'tolerance': config.oracle_tolerance,
        'passed': passed,
    }
    return table, summary, passed


def property_suite(config: RunConfig, params: ModelParams) -> Outcome:
    results = run_property_suite(params, seed=config.seed)
    table = pd.DataFrame(
        [(r.name, int(r.passed), r.max_error, r.tolerance, r.samples) for r in results],
        columns=['check', 'passed', 'max_error', 'tolerance', 'samples'],
    )
    passed = all(r.passed for r in results)
    summary = {'passed': passed, 'failed': [r.name for r in results if not r.passed]}
    return table, summary, passed


def huygens_scan(config: RunConfig, params: ModelParams) -> Outcome:
    data = build_data(config)
    rows = []
    for t in config.t:
        for point in config.points:
            r = float(np.linalg.norm(point))
            u = solve(EvalRequest(t=t, x=point, data=data, params=params, quad=config.quad))
            rows.append((t, r, u, abs(u)))
    table = pd.DataFrame(rows, columns=['t', 'r', 'u', 'abs_u'])

    summary: Dict[str, Any] = {'rows': len(rows)}
    radius = data.support_radius
    if radius is not None:
        outside = table[table['r'] > table['t'] + radius]
        inside = table[table['r'] < table['t'] - radius]
        summary['support_radius'] = radius
        summary['max_abs_outside_cone'] = float(outside['abs_u'].max()) if len(outside) else 0.0
        summary['max_abs_inside_backward_cone'] = float(inside['abs_u'].max()) if len(inside) else 0.0
    return table, summary, True


HANDLERS: Dict[CommandName, Callable[[RunConfig, ModelParams], Outcome]] = {
    CommandName.EVAL_KERNEL: eval_kernel,
    CommandName.SOLVE: solve_grid,
    CommandName.COMPARE_ORACLE: compare_oracle,
    CommandName.PROPERTY_SUITE: property_suite,
    CommandName.HUYGENS_SCAN: huygens_scan,
}


def _write_artifacts(config: RunConfig, table: pd.DataFrame, summary: dict) -> List[str]:
    if not config.out:
        return []
    path = Path(config.out)
    path.parent.mkdir(parents=True, exist_ok=True)
    if config.format == OutputFormat.JSON:
        artifacts = [write_json(table, config, path, summary)]
    else:
        artifacts = [write_csv(table, path)]
        if config.emit_plot:
            script = write_gnuplot(path, config.command, list(table.columns))
            if script is not None:
                artifacts.append(script)
    return [str(p) for p in artifacts]


def run(config: RunConfig) -> RunResult:
    """
    Execute one configured command.

    Exit code 0 when every requested check passes, 2 for configuration or parameter
    errors, 3 for numeric or any other unexpected failure and 4 when a check fails.
    """
    try:
        params = make_params(config.mu, config.nu2)
        table, summary, passed = HANDLERS[config.command](config, params)
    except (ConfigError, ParameterError, ValidationError) as e:
        logger.error("%s: %s", config.command.value, e)
        return RunResult(exit_code=EXIT_CONFIG_ERROR, error=str(e))
    except NumericError as e:
        logger.error("%s: numeric failure: %s", config.command.value, e)
        return RunResult(exit_code=EXIT_NUMERIC_ERROR, error=str(e))
    except Exception as e:
        logger.exception("%s: unexpected failure", config.command.value)
        return RunResult(exit_code=EXIT_NUMERIC_ERROR, error=f"{type(e).__name__}: {e}")

    artifacts = _write_artifacts(config, table, summary)
    exit_code = EXIT_OK if passed else EXIT_CHECK_FAILED
    logger.info("%s: %d rows, exit code %d", config.command.value, len(table), exit_code)
    return RunResult(exit_code=exit_code, table=table, summary=summary, artifacts=artifacts)
