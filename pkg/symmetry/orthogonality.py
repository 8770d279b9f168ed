"""Boundary orthogonality of eigenfunctions to the coordinate functions."""

import logging
import math
from typing import Dict, List

import numpy as np

import config
from fem import assemble_boundary_mass
from mesh import TriangleMesh
from steklov import COORDINATE_NAMES

logger = logging.getLogger(__name__)

# Eigenvalues this close to 1 belong to the coordinate cluster itself.
UNIT_EIGENVALUE_GAP = 1e-6


def eigenfunction_orthogonal_to_coordinates(u, mesh: TriangleMesh, sigma: float,
                                            mass=None) -> Dict[str, float]:
    """Relative boundary inner products u^T M x_i / (|u|_M |x_i|_M).

    Args:
        u: Eigenfunction (vertex values).
        mesh: The mesh.
        sigma: Eigenvalue of u.
        mass: Pre-assembled boundary mass matrix.

    Returns:
        Mapping x1/x2/x3 -> relative inner product (0.0 for a coordinate
        vanishing on the boundary).

    Raises:
        ValueError: sigma is within the eigenvalue-1 cluster, or u has the
            wrong length.
    """
    if abs(sigma - 1.0) <= UNIT_EIGENVALUE_GAP:
        raise ValueError(f"eigenvalue {sigma!r} lies in the coordinate cluster; the check does not apply")
    u = np.asarray(u, dtype=float)
    if u.shape != (mesh.vertex_count,):
        raise ValueError(f"vertex function has shape {u.shape}, expected ({mesh.vertex_count},)")
    M = assemble_boundary_mass(mesh) if mass is None else mass
    Mu = M @ u
    u_norm = float(np.sqrt(max(u @ Mu, 0.0)))
    result = {}
    for i, name in enumerate(COORDINATE_NAMES):
        x = mesh.vertices[:, i]
        x_norm = float(np.sqrt(max(x @ (M @ x), 0.0)))
        if x_norm == 0.0 or u_norm == 0.0:
            result[name] = 0.0
            continue
        result[name] = abs(float(x @ Mu)) / (u_norm * x_norm)
    return result


def coordinate_orthogonality(spectrum, mesh: TriangleMesh, problem, cluster_tol: float = None,
                             tol: float = None) -> List[dict]:
    """Boundary orthogonality of every mode outside the unit cluster to x1, x2, x3.

    A row passes when its relative inner product is at most tol. The
    a-posteriori bound |y| |L x - M x| / (|sigma - 1| |y|_M |x|_M), which any
    computed eigenpair satisfies, is reported next to it for diagnosis only.

    Args:
        spectrum: Computed spectrum of mesh.
        mesh: The mesh.
        problem: Assembled SteklovProblem of mesh.
        cluster_tol: Cluster tolerance (config default).
        tol: Acceptance threshold (config.ORTHOGONALITY_TOLERANCE by default).

    Returns:
        One row per (mode, nonvanishing coordinate): mode, coordinate,
        value, bound and passed.
    """
    tol = config.ORTHOGONALITY_TOLERANCE if tol is None else tol
    L = problem.dtn
    Mb = problem.boundary_mass
    rows = []
    for cluster in spectrum.clusters(cluster_tol):
        if abs(cluster.value - 1.0) <= config.FREE_BOUNDARY_TOLERANCE:
            continue
        for k in cluster.indices:
            sigma = float(spectrum.eigenvalues[k])
            try:
                values = eigenfunction_orthogonal_to_coordinates(spectrum.extensions[:, k], mesh, sigma, problem.M)
            except ValueError:
                continue
            y = spectrum.boundary_modes[:, k]
            y_norm = math.sqrt(float(y @ Mb @ y))
            for i, (name, value) in enumerate(values.items()):
                x = mesh.vertices[problem.boundary, i]
                x_norm = math.sqrt(float(x @ Mb @ x))
                if x_norm == 0.0:
                    continue
                # Self-adjointness gives (sigma - 1) y.M x = y.(L x - M x).
                bound = float(np.linalg.norm(y) * np.linalg.norm(L @ x - Mb @ x)) / (abs(sigma - 1.0) * y_norm * x_norm)
                rows.append({"mode": k, "coordinate": name, "value": value, "bound": bound, "passed": value <= tol})
    failed = [row for row in rows if not row["passed"]]
    if failed:
        logger.warning("%d coordinate inner products exceed %.1e (worst %.3e)",
                       len(failed), tol, max(row["value"] for row in failed))
    return rows
