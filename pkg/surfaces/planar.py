"""Flat surfaces in the equatorial plane: the unit disk and annuli.

Both use polar parameters (radius, angle). The unit disk is the simplest
free boundary minimal surface; the annulus is a Steklov test domain with
a closed-form spectrum but its inner circle does not reach the sphere.
"""

from typing import Tuple

import numpy as np

from errors import ConfigError
from surfaces.base import ParametricSurface


class _PolarSurface(ParametricSurface):

    def point(self, u, v) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        return np.stack(np.broadcast_arrays(u * np.cos(v), u * np.sin(v), np.zeros_like(u * v)), axis=-1)

    def derivatives(self, u, v) -> Tuple[np.ndarray, np.ndarray]:
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        zero = np.zeros_like(u * v)
        fu = np.stack(np.broadcast_arrays(np.cos(v), np.sin(v), zero), axis=-1)
        fv = np.stack(np.broadcast_arrays(-u * np.sin(v), u * np.cos(v), zero), axis=-1)
        return fu, fv


class DiskSurface(_PolarSurface):
    """Equatorial unit disk, symmetric through the planes x1 = 0 and x2 = 0."""

    topology = "disk"

    def __init__(self):
        super().__init__(name="unit-disk", u_range=(0.0, 1.0), symmetry_axes=(0, 1), boundary_u=(1.0,))


class AnnulusSurface(_PolarSurface):
    """Flat annulus inner_radius <= |x| <= 1 in the plane x3 = 0."""

    def __init__(self, inner_radius: float):
        if not 0.0 < inner_radius < 1.0:
            raise ConfigError(f"annulus inner radius must lie in (0, 1), got {inner_radius!r}")
        self.inner_radius = float(inner_radius)
        super().__init__(
            name=f"flat-annulus:{self.inner_radius!r}",
            u_range=(self.inner_radius, 1.0),
            symmetry_axes=(0, 1),
            boundary_u=(self.inner_radius, 1.0),
        )
