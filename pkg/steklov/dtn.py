"""Discrete Dirichlet-to-Neumann operator by Schur complement.

With vertices split into boundary (b) and interior (i) blocks, the
harmonic extension of boundary data v_b has interior values
v_i = -K_ii^{-1} K_ib v_b, and the DtN matrix is
L = K_bb - K_bi K_ii^{-1} K_ib.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy import sparse
from scipy.sparse import linalg as spla

from errors import SolverError
from fem import SparseSymMatrix, assemble_boundary_mass, assemble_stiffness
from mesh import TriangleMesh

logger = logging.getLogger(__name__)

# Columns of K_ib solved per batch when forming the Schur complement.
COLUMN_BLOCK = 64


def split_vertices(mesh: TriangleMesh) -> Tuple[np.ndarray, np.ndarray]:
    """Sorted boundary ids and sorted interior ids."""
    boundary = mesh.boundary_vertices()
    mask = np.ones(mesh.vertex_count, dtype=bool)
    mask[boundary] = False
    return boundary, np.flatnonzero(mask)


def _complement(n: int, boundary: np.ndarray) -> np.ndarray:
    mask = np.ones(n, dtype=bool)
    mask[boundary] = False
    return np.flatnonzero(mask)


class InteriorSolver:
    """Sparse LU factorization of the interior block K_ii."""

    def __init__(self, K: SparseSymMatrix, boundary: np.ndarray):
        boundary = np.asarray(boundary, dtype=int)
        if boundary.size == 0:
            raise SolverError("no boundary vertices: the interior block would be the full singular stiffness")
        self.K = sparse.csr_matrix(K)
        self.boundary = np.sort(boundary)
        self.interior = _complement(self.K.shape[0], self.boundary)
        self.K_ib = self.K[self.interior][:, self.boundary].tocsc()
        self._lu = None
        if self.interior.size:
            K_ii = self.K[self.interior][:, self.interior].tocsc()
            try:
                self._lu = spla.splu(K_ii)
            except RuntimeError as exc:
                raise SolverError(f"singular interior block of size {K_ii.shape[0]}: {exc}") from exc
            logger.debug("factored interior block of size %d", K_ii.shape[0])

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        """K_ii^{-1} rhs for a vector or a column block."""
        if self._lu is None:
            return np.zeros_like(rhs, dtype=float)
        result = self._lu.solve(np.asarray(rhs, dtype=float))
        if not np.all(np.isfinite(result)):
            raise SolverError("interior solve produced non-finite values (singular interior block)")
        return result

    def extend(self, boundary_values: np.ndarray) -> np.ndarray:
        """Harmonic extension of boundary data (vector or column block) to all vertices."""
        values = np.asarray(boundary_values, dtype=float)
        if values.shape[0] != self.boundary.size:
            raise ValueError(f"expected {self.boundary.size} boundary values, got {values.shape[0]}")
        full = np.zeros((self.K.shape[0],) + values.shape[1:])
        full[self.boundary] = values
        if self.interior.size:
            full[self.interior] = -self.solve(self.K_ib @ values)
        return full

    def schur_complement(self) -> np.ndarray:
        """Dense, symmetrized L = K_bb - K_bi K_ii^{-1} K_ib."""
        L = self.K[self.boundary][:, self.boundary].toarray()
        if self.interior.size:
            K_bi = self.K_ib.T.tocsr()
            for start in range(0, self.boundary.size, COLUMN_BLOCK):
                cols = slice(start, start + COLUMN_BLOCK)
                X = self.solve(self.K_ib[:, cols].toarray())
                L[:, cols] -= K_bi @ X
        return 0.5 * (L + L.T)


def dtn_operator(K: SparseSymMatrix, M: Optional[SparseSymMatrix], boundary_index_set) -> np.ndarray:
    """Discrete DtN matrix on the given boundary vertices.

    Args:
        K: Stiffness matrix.
        M: Boundary mass matrix (unused by the Schur complement itself;
            accepted so callers can pass the assembled pair).
        boundary_index_set: Boundary vertex ids (any order; sorted internally).

    Returns:
        Dense symmetric L indexed by the sorted boundary ids.

    Raises:
        SolverError: Empty boundary or singular interior block.
    """
    boundary = np.unique(np.asarray(list(boundary_index_set), dtype=int))
    return InteriorSolver(K, boundary).schur_complement()


def harmonic_extension(K: SparseSymMatrix, boundary_values, boundary_indices) -> np.ndarray:
    """Extend boundary data harmonically: K_ii v_i = -K_ib v_b.

    Args:
        K: Stiffness matrix.
        boundary_values: Values at the sorted boundary ids.
        boundary_indices: Boundary vertex ids.

    Returns:
        Vertex function agreeing with boundary_values on the boundary.
    """
    boundary = np.unique(np.asarray(boundary_indices, dtype=int))
    return InteriorSolver(K, boundary).extend(boundary_values)


class SteklovProblem:
    """Assembled Steklov problem on one mesh with cached factorization.

    Attributes:
        mesh: The mesh.
        K: Stiffness matrix.
        M: Boundary mass matrix.
        boundary: Sorted boundary ids.
        interior: Sorted interior ids.
    """

    def __init__(self, mesh: TriangleMesh, stiffness: SparseSymMatrix = None, mass: SparseSymMatrix = None):
        self.mesh = mesh
        self.K = assemble_stiffness(mesh) if stiffness is None else stiffness
        self.M = assemble_boundary_mass(mesh) if mass is None else mass
        self.boundary, self.interior = split_vertices(mesh)
        self.solver = InteriorSolver(self.K, self.boundary)
        self._dtn = None

    @property
    def dtn(self) -> np.ndarray:
        """Dense DtN matrix (computed once)."""
        if self._dtn is None:
            self._dtn = self.solver.schur_complement()
            logger.debug("DtN matrix of size %d for %s", self.boundary.size, self.mesh.mesh_ref)
        return self._dtn

    @property
    def boundary_mass(self) -> np.ndarray:
        """Dense boundary-boundary block of M."""
        return self.M[self.boundary][:, self.boundary].toarray()

    def extend(self, boundary_values: np.ndarray) -> np.ndarray:
        return self.solver.extend(boundary_values)
