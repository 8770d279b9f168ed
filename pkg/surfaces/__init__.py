"""Analytic catalog of surfaces with boundary.

This module provides exact charts, derivatives and boundary conormals for
the critical catenoid, rescaled catenoids, the unit disk and flat annuli.
"""

from surfaces.base import ParametricSurface, boundary_conormal
from surfaces.catenoid import (
    CatenoidParams,
    CatenoidSurface,
    catenoid_point,
    catenoid_scale,
    solve_rho0,
)
from surfaces.planar import AnnulusSurface, DiskSurface
from surfaces.catalog import CATALOG_NAMES, catalog, parse_surface_spec

__all__ = [
    'ParametricSurface',
    'boundary_conormal',
    'CatenoidParams',
    'CatenoidSurface',
    'catenoid_point',
    'catenoid_scale',
    'solve_rho0',
    'AnnulusSurface',
    'DiskSurface',
    'CATALOG_NAMES',
    'catalog',
    'parse_surface_spec',
]
