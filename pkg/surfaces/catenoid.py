"""Catenoids meeting the unit sphere, critical one included.

The critical catenoid is F(r, t) = (cosh r cos t, cosh r sin t, r) / (rho0 cosh rho0)
with rho0 tanh rho0 = 1; its boundary circles lie on the unit sphere and
meet it orthogonally. Other members of the family are rescaled so their
boundary circles also lie on the unit sphere.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from errors import ConfigError
from surfaces.base import ParametricSurface

logger = logging.getLogger(__name__)

_BRACKET = (1.0, 2.0)
_BISECTION_WIDTH = 1e-14


def _rho_equation(rho: float) -> float:
    return rho * math.tanh(rho) - 1.0


def _rho_equation_slope(rho: float) -> float:
    return math.tanh(rho) + rho / math.cosh(rho) ** 2


@lru_cache(maxsize=None)
def _bisect_rho0() -> float:
    lo, hi = _BRACKET
    while hi - lo > _BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        if _rho_equation(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    rho = 0.5 * (lo + hi)
    for _ in range(2):
        rho -= _rho_equation(rho) / _rho_equation_slope(rho)
    return rho


def solve_rho0(tolerance: float = 1e-12) -> float:
    """Root of rho tanh rho = 1 on [1, 2].

    Safeguarded bisection down to a 1e-14 bracket followed by two Newton
    polish steps. The root is unique in the bracket (f(1) < 0 < f(2) and f
    is increasing), so the result is deterministic.

    Args:
        tolerance: Required bound on |rho tanh rho - 1|.

    Returns:
        rho0 ~= 1.19967864.
    """
    if not tolerance > 0.0:
        raise ConfigError(f"tolerance must be positive, got {tolerance!r}")
    rho = _bisect_rho0()
    residual = abs(_rho_equation(rho))
    if residual >= tolerance:
        # Only reachable for tolerances below rounding of the defining equation.
        logger.warning("rho0 residual %.3e exceeds requested tolerance %.3e", residual, tolerance)
    return rho


def catenoid_scale(rho: float) -> float:
    """Scale putting both boundary circles of the rho-catenoid on the unit sphere."""
    return 1.0 / math.sqrt(math.cosh(rho) ** 2 + rho * rho)


@dataclass(frozen=True)
class CatenoidParams:
    """Half-height and overall scale of a catenoid piece.

    Attributes:
        rho: Half-height parameter (> 0).
        scale: Overall scale factor (> 0).
    """
    rho: float
    scale: float

    def __post_init__(self):
        if not (self.rho > 0.0 and self.scale > 0.0):
            raise ConfigError(f"catenoid parameters must be positive, got rho={self.rho!r} scale={self.scale!r}")

    @classmethod
    def critical(cls) -> "CatenoidParams":
        """The critical catenoid: rho = rho0, scale = 1 / (rho0 cosh rho0)."""
        rho0 = solve_rho0()
        return cls(rho=rho0, scale=1.0 / (rho0 * math.cosh(rho0)))

    @classmethod
    def normalized(cls, rho: float) -> "CatenoidParams":
        """Catenoid of half-height rho rescaled to the unit sphere."""
        if not rho > 0.0:
            raise ConfigError(f"catenoid half-height must be positive, got {rho!r}")
        return cls(rho=float(rho), scale=catenoid_scale(rho))


def catenoid_point(r: float, theta: float, params: CatenoidParams) -> np.ndarray:
    """Evaluate scale * (cosh r cos theta, cosh r sin theta, r).

    Raises:
        ConfigError: If |r| exceeds params.rho.
    """
    if abs(r) > params.rho * (1.0 + 1e-12):
        raise ConfigError(f"r={r!r} outside [-{params.rho!r}, {params.rho!r}]")
    c = math.cosh(r)
    return params.scale * np.array([c * math.cos(theta), c * math.sin(theta), r])


class CatenoidSurface(ParametricSurface):
    """Catenoid piece r in [-rho, rho], symmetric through all three coordinate planes."""

    def __init__(self, params: CatenoidParams, name: str = None):
        self.params = params
        super().__init__(
            name=name or f"catenoid:{params.rho!r}",
            u_range=(-params.rho, params.rho),
            symmetry_axes=(0, 1, 2),
            boundary_u=(-params.rho, params.rho),
        )

    @property
    def is_critical(self) -> bool:
        return abs(_rho_equation(self.params.rho)) < 1e-12

    def point(self, u, v) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        c = np.cosh(u)
        s = self.params.scale
        return np.stack(np.broadcast_arrays(s * c * np.cos(v), s * c * np.sin(v), s * u), axis=-1)

    def derivatives(self, u, v) -> Tuple[np.ndarray, np.ndarray]:
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        s = self.params.scale
        sh = np.sinh(u)
        ch = np.cosh(u)
        fu = np.stack(np.broadcast_arrays(s * sh * np.cos(v), s * sh * np.sin(v), s * np.ones_like(u)), axis=-1)
        fv = np.stack(np.broadcast_arrays(-s * ch * np.sin(v), s * ch * np.cos(v), np.zeros_like(u)), axis=-1)
        return fu, fv
