"""
Finite speed of propagation and Huygens' principle, checked by sampling the solver.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from ..settings import scalewave_settings
from ..wave_models.fields import CauchyData
from ..wave_models.params import ModelParams
from ..wave_models.quadrature import QuadratureConfig
from ..wave_models.request import EvalRequest

logger = logging.getLogger(__name__)


class SupportReport(BaseModel):
    max_abs: float
    tolerance: float
    passed: bool
    points_checked: int
    worst_point: Optional[Tuple[float, Tuple[float, ...]]] = None

    class Config:
        allow_mutation = False


def _directions(dim: int) -> List[np.ndarray]:
    directions = []
    for i in range(dim):
        e = np.zeros(dim)
        e[i] = 1.0
        directions.extend([e, -e])
    if dim > 1:
        diagonal = np.ones(dim) / np.sqrt(dim)
        directions.extend([diagonal, -diagonal])
    return directions


def _scan(data: CauchyData, params: ModelParams, points: Sequence[Tuple[float, Tuple[float, ...]]],
          quad: QuadratureConfig, tolerance: float) -> SupportReport:
    from . import solve

    max_abs = 0.0
    worst = None
    for t, x in points:
        u = abs(solve(EvalRequest(t=t, x=x, data=data, params=params, quad=quad)))
        if worst is None or u > max_abs:
            max_abs, worst = u, (t, x)
    passed = max_abs <= tolerance
    logger.info("support scan: %d points, max |u| = %.3e (tolerance %.1e)", len(points), max_abs, tolerance)
    return SupportReport(max_abs=max_abs, tolerance=tolerance, passed=passed,
                         points_checked=len(points), worst_point=worst)


def check_support(data: CauchyData, params: ModelParams, times: Sequence[float],
                  margins: Sequence[float] = (0.05, 0.25, 1.0), radius: float = None,
                  quad: QuadratureConfig = None, tolerance: float = None) -> SupportReport:
    """
    Max |u(t, x)| over sample points just outside the forward cone |x| <= R + t.

    ``radius`` defaults to data.support_radius; with unknown support nothing is sampled
    and the report passes vacuously.
    """
    quad = quad or QuadratureConfig()
    tolerance = scalewave_settings.SUPPORT_TOLERANCE if tolerance is None else tolerance
    radius = data.support_radius if radius is None else radius
    if radius is None:
        logger.warning("check_support: data has no known support radius")
        return SupportReport(max_abs=0.0, tolerance=tolerance, passed=True, points_checked=0)

    points = []
    for t in times:
        for margin in margins:
            for e in _directions(data.dim):
                points.append((float(t), tuple(float(v) for v in (radius + t + margin) * e)))
    return _scan(data, params, points, quad, tolerance)


def check_huygens(data: CauchyData, params: ModelParams, t: float,
                  margins: Sequence[float] = (0.1, 0.5, 1.0), radius: float = None,
                  quad: QuadratureConfig = None, tolerance: float = None) -> SupportReport:
    """
    Max |u(t, x)| inside the backward cone |x| < t - R - margin, where the solution
    vanishes when Huygens' principle holds (delta = 1, odd n >= 3, f = 0).
    """
    quad = quad or QuadratureConfig()
    tolerance = scalewave_settings.HUYGENS_TOLERANCE if tolerance is None else tolerance
    radius = data.support_radius if radius is None else radius
    if radius is None:
        logger.warning("check_huygens: data has no known support radius")
        return SupportReport(max_abs=0.0, tolerance=tolerance, passed=True, points_checked=0)

    points = [(float(t), tuple(0.0 for _ in range(data.dim)))] if t - radius > min(margins) else []
    for margin in margins:
        depth = t - radius - margin
        if depth <= 0:
            continue
        for e in _directions(data.dim):
            points.append((float(t), tuple(float(v) for v in depth * e)))
    return _scan(data, params, points, quad, tolerance)
