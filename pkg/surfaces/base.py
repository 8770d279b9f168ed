"""Abstract parametric surface with boundary.

Every catalog surface is a chart from a parameter rectangle
[u_min, u_max] x [0, 2*pi) into R^3 with the second parameter periodic.
Charts expose analytic first derivatives, so conormals are exact up to
rounding.
"""

import math
from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np

from errors import ConfigError

AXIS_NORMALS = np.eye(3)

# Relative slack when deciding whether a parameter sits on the boundary.
_BOUNDARY_SLACK = 1e-12


class ParametricSurface(ABC):
    """Chart of a surface with boundary plus its known reflection symmetries.

    Subclasses implement point and derivatives. Symmetry planes are the
    coordinate planes listed in symmetry_axes; for each of them
    reparametrize returns the parameter p' with R(chart(p)) = chart(p').
    Instances are immutable after construction.

    Attributes:
        name: Catalog identifier.
        u_range: Closed range of the first parameter.
        periodic: Whether the second parameter is periodic (always True here).
        symmetry_axes: Coordinate axes whose orthogonal plane is a symmetry.
        boundary_u: First-parameter values that form the boundary.
    """

    topology = "annulus"

    def __init__(self, name: str, u_range: Tuple[float, float],
                 symmetry_axes: Tuple[int, ...], boundary_u: Tuple[float, ...]):
        self.name = name
        self.u_range = (float(u_range[0]), float(u_range[1]))
        self.periodic = True
        self.symmetry_axes = tuple(symmetry_axes)
        self.boundary_u = tuple(float(u) for u in boundary_u)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"

    @property
    def symmetry_planes(self) -> Tuple[np.ndarray, ...]:
        """Unit normals of the symmetry planes, in axis order."""
        return tuple(AXIS_NORMALS[axis].copy() for axis in self.symmetry_axes)

    @abstractmethod
    def point(self, u, v) -> np.ndarray:
        """Evaluate the chart; broadcasts over array arguments, last axis is xyz."""

    @abstractmethod
    def derivatives(self, u, v) -> Tuple[np.ndarray, np.ndarray]:
        """Analytic partial derivatives (F_u, F_v) of the chart."""

    def reparametrize(self, axis: int, u: float, v: float) -> Tuple[float, float]:
        """Parameter of the mirror image of chart(u, v) through plane `axis`.

        Args:
            axis: 0, 1 or 2 for the planes x1 = 0, x2 = 0, x3 = 0.
            u: First parameter.
            v: Angular parameter.

        Returns:
            (u', v') with R_axis(chart(u, v)) == chart(u', v').
        """
        if axis not in self.symmetry_axes:
            raise ConfigError(f"{self.name} is not symmetric through plane x{axis + 1} = 0")
        if axis == 0:
            return u, (math.pi - v) % (2.0 * math.pi)
        if axis == 1:
            return u, (-v) % (2.0 * math.pi)
        return -u, v

    def outward_sign(self, u: float) -> float:
        """+1 when u is the upper boundary value, -1 for the lower one."""
        lo, hi = self.u_range
        scale = max(1.0, abs(lo), abs(hi))
        if abs(u - hi) <= _BOUNDARY_SLACK * scale and hi in self.boundary_u:
            return 1.0
        if abs(u - lo) <= _BOUNDARY_SLACK * scale and lo in self.boundary_u:
            return -1.0
        raise ConfigError(f"parameter u={u!r} is not on the boundary of {self.name}")

    def check_immersion(self, samples: int = 16) -> float:
        """Smallest |F_u x F_v| over an interior sample grid (must be > 0)."""
        lo, hi = self.u_range
        us = np.linspace(lo, hi, samples + 2)[1:-1]
        vs = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
        uu, vv = np.meshgrid(us, vs, indexing="ij")
        fu, fv = self.derivatives(uu, vv)
        return float(np.linalg.norm(np.cross(fu, fv), axis=-1).min())

    def boundary_radius_residual(self, samples: int = 64) -> float:
        """Max over sampled boundary points of | |chart| - 1 |."""
        vs = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
        worst = 0.0
        for u in self.boundary_u:
            radii = np.linalg.norm(self.point(np.full_like(vs, u), vs), axis=-1)
            worst = max(worst, float(np.abs(radii - 1.0).max()))
        return worst


def boundary_conormal(surface: ParametricSurface, boundary_point: Tuple[float, float]) -> np.ndarray:
    """Outward unit conormal of the surface at a boundary parameter.

    The outward parameter direction is projected orthogonally to the
    boundary tangent F_v and normalized.

    Args:
        surface: Catalog surface.
        boundary_point: (u, v) with u one of surface.boundary_u.

    Returns:
        Unit vector in R^3 tangent to the surface and normal to its boundary.
    """
    u, v = boundary_point
    sign = surface.outward_sign(u)
    fu, fv = surface.derivatives(float(u), float(v))
    outward = sign * np.asarray(fu, dtype=float)
    tangent = np.asarray(fv, dtype=float)
    conormal = outward - (outward @ tangent) / (tangent @ tangent) * tangent
    return conormal / np.linalg.norm(conormal)
