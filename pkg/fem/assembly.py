"""Piecewise-linear stiffness and boundary mass matrices.

Both matrices are assembled in triangle (resp. boundary edge) order into
scipy sparse CSR storage. Entry (i, j) and entry (j, i) receive the same
contributions in the same order, so the matrices are exactly symmetric.
"""

import logging
from pathlib import Path
from typing import List

import numpy as np
from scipy import io as sio
from scipy import sparse

import config
from errors import MeshError
from mesh import GroupAction, TriangleMesh
from utils import corner_cotangents, triangle_areas

logger = logging.getLogger(__name__)

SparseSymMatrix = sparse.csr_matrix


def _check_triangles(mesh: TriangleMesh) -> None:
    areas = triangle_areas(mesh.vertices, mesh.triangles)
    if not areas.size:
        raise MeshError(f"mesh {mesh.name} has no triangles")
    bad = np.flatnonzero(areas < config.DEGENERATE_AREA_RATIO * float(areas.mean()))
    if bad.size:
        t = int(bad[0])
        raise MeshError(f"cannot assemble: triangle {t} {mesh.triangles[t].tolist()} is degenerate (area {areas[t]:.3e})")


def assemble_stiffness(mesh: TriangleMesh) -> SparseSymMatrix:
    """Cotangent Laplacian K with u^T K v = sum of integrals of grad u . grad v.

    The edge opposite corner k gets weight cot(angle_k) / 2: it is
    subtracted from the two off-diagonal entries of the edge and added to
    both diagonal entries.

    Raises:
        MeshError: A triangle with (near) zero area.
    """
    _check_triangles(mesh)
    weights = 0.5 * corner_cotangents(mesh.vertices, mesh.triangles)
    rows: List[np.ndarray] = []
    cols: List[np.ndarray] = []
    vals: List[np.ndarray] = []
    for k in range(3):
        i = mesh.triangles[:, (k + 1) % 3]
        j = mesh.triangles[:, (k + 2) % 3]
        w = weights[:, k]
        rows.extend((i, j, i, j))
        cols.extend((j, i, i, j))
        vals.extend((-w, -w, w, w))
    n = mesh.vertex_count
    matrix = sparse.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))), shape=(n, n)
    ).tocsr()
    logger.debug("stiffness for %s: %d x %d, %d nonzeros", mesh.mesh_ref, n, n, matrix.nnz)
    return matrix


def assemble_boundary_mass(mesh: TriangleMesh) -> SparseSymMatrix:
    """Consistent boundary mass M with u^T M v = integral of u v over the boundary.

    Each boundary edge of length L contributes L/6 * [[2, 1], [1, 2]].
    """
    edges = np.array(mesh.boundary_edges(), dtype=int).reshape(-1, 2)
    a, b = edges[:, 0], edges[:, 1]
    lengths = np.linalg.norm(mesh.vertices[b] - mesh.vertices[a], axis=1)
    diag = lengths / 3.0
    off = lengths / 6.0
    n = mesh.vertex_count
    matrix = sparse.coo_matrix(
        (np.concatenate([off, off, diag, diag]), (np.concatenate([a, b, a, b]), np.concatenate([b, a, a, b]))),
        shape=(n, n),
    ).tocsr()
    logger.debug("boundary mass for %s: %d boundary edges", mesh.mesh_ref, len(edges))
    return matrix


def _vertex_function(mesh: TriangleMesh, u) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if u.shape != (mesh.vertex_count,):
        raise ValueError(f"vertex function has shape {u.shape}, expected ({mesh.vertex_count},)")
    return u


def dirichlet_energy(mesh: TriangleMesh, u, stiffness: SparseSymMatrix = None) -> float:
    """Dirichlet energy u^T K u of a piecewise-linear vertex function.

    Args:
        mesh: The mesh.
        u: Vertex values.
        stiffness: Pre-assembled K (assembled on demand otherwise).

    Raises:
        ValueError: u does not have one value per vertex.
    """
    u = _vertex_function(mesh, u)
    K = assemble_stiffness(mesh) if stiffness is None else stiffness
    return float(u @ (K @ u))


def boundary_norm_squared(mesh: TriangleMesh, u, mass: SparseSymMatrix = None) -> float:
    """Boundary integral of u^2, u^T M u."""
    u = _vertex_function(mesh, u)
    M = assemble_boundary_mass(mesh) if mass is None else mass
    return float(u @ (M @ u))


def equivariance_defect(matrix: SparseSymMatrix, action: GroupAction) -> float:
    """Largest entry of |P^T A P - A| over all generators."""
    worst = 0.0
    for k in range(len(action.generators)):
        P = action.permutation_matrix(k)
        diff = (P.T @ matrix @ P - matrix).tocoo()
        if diff.nnz:
            worst = max(worst, float(np.abs(diff.data).max()))
    return worst


def export_matrix_market(matrix: SparseSymMatrix, path) -> Path:
    """Write a sparse matrix in Matrix Market coordinate format (".mtx" appended when missing)."""
    path = Path(path)
    if path.suffix != ".mtx":
        path = path.with_name(path.name + ".mtx")
    sio.mmwrite(str(path), sparse.coo_matrix(matrix), precision=config.SIGNIFICANT_DIGITS)
    return path
