"""Rayleigh quotients and the free-boundary (coordinate eigenfunction) verifier."""

import logging
import math
from typing import Dict, Optional, Sequence

import numpy as np

import config
from errors import MeshError, SolverError
from fem import assemble_boundary_mass, assemble_stiffness
from mesh import TriangleMesh
from steklov.dtn import SteklovProblem
from utils import relative_residual

logger = logging.getLogger(__name__)

COORDINATE_NAMES = ("x1", "x2", "x3")


def _vertex_function(mesh: TriangleMesh, u) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if u.shape != (mesh.vertex_count,):
        raise ValueError(f"vertex function has shape {u.shape}, expected ({mesh.vertex_count},)")
    return u


def rayleigh_quotient(mesh: TriangleMesh, u, problem: SteklovProblem = None) -> float:
    """u^T K u / u^T M u.

    Raises:
        SolverError: u vanishes on the boundary.
    """
    u = _vertex_function(mesh, u)
    K = problem.K if problem else assemble_stiffness(mesh)
    M = problem.M if problem else assemble_boundary_mass(mesh)
    denominator = float(u @ (M @ u))
    if denominator <= np.finfo(float).tiny:
        raise SolverError("Rayleigh quotient undefined: zero boundary norm")
    return float(u @ (K @ u)) / denominator


def boundary_mean(mesh: TriangleMesh, u, problem: SteklovProblem = None) -> float:
    """Boundary integral of u (zero for every nonconstant Steklov mode)."""
    u = _vertex_function(mesh, u)
    M = problem.M if problem else assemble_boundary_mass(mesh)
    return float(np.ones(mesh.vertex_count) @ (M @ u))


def boundary_radius_defect(mesh: TriangleMesh) -> float:
    """max over boundary vertices of | |x| - 1 |."""
    radii = np.linalg.norm(mesh.vertices[mesh.boundary_vertices()], axis=1)
    return float(np.abs(radii - 1.0).max()) if radii.size else 0.0


def coordinate_residual(mesh: TriangleMesh, problem: SteklovProblem = None) -> Dict[str, Optional[float]]:
    """Relative residual of each coordinate function as a Steklov eigenfunction with sigma = 1.

    For coordinate x_i restricted to the boundary the value is
    |L x_i - M_b x_i| / |M_b x_i|; it vanishes in the limit iff the surface
    meets the sphere orthogonally. Identically zero coordinates map to None.

    Raises:
        MeshError: A boundary vertex is off the unit sphere.
    """
    defect = boundary_radius_defect(mesh)
    if defect > config.SPHERE_TOLERANCE:
        raise MeshError(f"boundary of {mesh.name} is not on the unit sphere (max radius defect {defect:.3e})")
    problem = problem or SteklovProblem(mesh)
    L = problem.dtn
    Mb = problem.boundary_mass
    result: Dict[str, Optional[float]] = {}
    for i, name in enumerate(COORDINATE_NAMES):
        x = mesh.vertices[problem.boundary, i]
        Mx = Mb @ x
        if not np.any(Mx):
            result[name] = None
            continue
        result[name] = relative_residual(L @ x - Mx, Mx)
    logger.debug("coordinate residuals for %s: %s", mesh.mesh_ref, result)
    return result


def max_coordinate_residual(residuals: Dict[str, Optional[float]]) -> float:
    """Largest defined residual (0 when all are undefined)."""
    values = [r for r in residuals.values() if r is not None]
    return max(values) if values else 0.0


def richardson_order(values: Sequence[float]) -> float:
    """Observed convergence order from three successive 2x refinements.

    Args:
        values: (coarse, medium, fine) approximations of one quantity.

    Returns:
        log2(|v0 - v1| / |v1 - v2|).
    """
    if len(values) != 3:
        raise ValueError(f"need three refinement levels, got {len(values)}")
    v0, v1, v2 = (float(v) for v in values)
    coarse, fine = abs(v0 - v1), abs(v1 - v2)
    if coarse == 0.0 or fine == 0.0:
        raise ValueError("successive values coincide; order is undefined")
    return math.log2(coarse / fine)
