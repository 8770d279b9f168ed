"""Steklov eigenpairs from the generalized problem L y = sigma M_b y."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np
from scipy import linalg

import config
from errors import ConfigError, SolverError
from mesh import TriangleMesh
from steklov.dtn import SteklovProblem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cluster:
    """Group of numerically equal eigenvalues.

    Attributes:
        value: Mean eigenvalue of the group.
        multiplicity: Number of modes.
        indices: Mode indices in ascending order.
    """
    value: float
    multiplicity: int
    indices: tuple


def cluster_values(values, tol: float) -> List[Cluster]:
    """Group ascending values; a new group starts when the gap exceeds tol * (1 + |previous|)."""
    values = np.asarray(values, dtype=float)
    groups: List[List[int]] = []
    for k, value in enumerate(values):
        if groups and value - values[k - 1] <= tol * (1.0 + abs(values[k - 1])):
            groups[-1].append(k)
        else:
            groups.append([k])
    return [Cluster(value=float(values[g].mean()), multiplicity=len(g), indices=tuple(g)) for g in groups]


@dataclass(eq=False)
class Spectrum:
    """Ordered Steklov eigenpairs of one mesh.

    Attributes:
        eigenvalues: Ascending eigenvalues.
        boundary_modes: (nb, k) boundary eigenvectors, M_b-orthonormal.
        extensions: (n, k) harmonic extensions to all vertices.
        boundary_indices: Sorted boundary vertex ids (rows of boundary_modes).
        boundary_mass: Dense M_b.
        residuals: Per-mode diagnostics keyed by name.
        mesh_ref: Identifier of the originating mesh.
        requested_modes: Mode count asked for; eigenvalues may run past it
            to finish the last cluster.
    """
    eigenvalues: np.ndarray
    boundary_modes: np.ndarray
    extensions: np.ndarray
    boundary_indices: np.ndarray
    boundary_mass: np.ndarray
    residuals: Dict[str, np.ndarray] = field(default_factory=dict)
    mesh_ref: str = ""
    requested_modes: int = 0

    @property
    def num_modes(self) -> int:
        return len(self.eigenvalues)

    def clusters(self, tol: float = None) -> List[Cluster]:
        """Multiplicity groups with relative tolerance tol (config default)."""
        return cluster_values(self.eigenvalues, config.CLUSTER_TOLERANCE if tol is None else tol)

    def cluster_of(self, index: int, tol: float = None) -> Cluster:
        """The cluster containing mode index."""
        if not 0 <= index < self.num_modes:
            raise ConfigError(f"mode {index} out of range 0..{self.num_modes - 1}")
        for cluster in self.clusters(tol):
            if index in cluster.indices:
                return cluster
        raise AssertionError("every mode belongs to a cluster")

    def first_nonzero_cluster(self, tol: float = None) -> Cluster:
        """The sigma_1 cluster (the one after the cluster holding mode 0)."""
        clusters = self.clusters(tol)
        if len(clusters) < 2:
            raise ConfigError("spectrum has no mode beyond sigma_0; request more modes")
        return clusters[1]

    def orthonormality_defect(self) -> float:
        """max |Y^T M_b Y - I|."""
        gram = self.boundary_modes.T @ self.boundary_mass @ self.boundary_modes
        return float(np.abs(gram - np.eye(self.num_modes)).max())

    def cross_orthogonality(self, gap: float = None) -> float:
        """Largest |u^T M_b v| / (|u|_M |v|_M) over mode pairs whose eigenvalues differ by more than gap."""
        gap = config.EIGENVALUE_GAP if gap is None else gap
        gram = self.boundary_modes.T @ self.boundary_mass @ self.boundary_modes
        norms = np.sqrt(np.abs(np.diag(gram)))
        worst = 0.0
        for a in range(self.num_modes):
            for b in range(a + 1, self.num_modes):
                if abs(self.eigenvalues[a] - self.eigenvalues[b]) > gap:
                    worst = max(worst, abs(gram[a, b]) / (norms[a] * norms[b]))
        return float(worst)


def _fix_signs(modes: np.ndarray) -> np.ndarray:
    """Make the first entry of largest magnitude in every column positive."""
    pivots = np.argmax(np.abs(modes), axis=0)
    signs = np.sign(modes[pivots, np.arange(modes.shape[1])])
    signs[signs == 0] = 1.0
    return modes * signs


def solve_pencil(L: np.ndarray, Mb: np.ndarray, num_modes: int):
    """Smallest num_modes eigenpairs of L y = sigma Mb y.

    Uses Mb = C^T C and a symmetric eigensolve of C^{-T} L C^{-1}.

    Returns:
        (eigenvalues, Y) with Y^T Mb Y = I.

    Raises:
        SolverError: Mb not positive definite or eigensolver failure.
    """
    try:
        C = linalg.cholesky(Mb, lower=False)
        B = linalg.solve_triangular(C, L, trans="T")
        A = linalg.solve_triangular(C, B.T, trans="T")
        A = 0.5 * (A + A.T)
        values, Z = linalg.eigh(A, subset_by_index=[0, num_modes - 1])
        Y = linalg.solve_triangular(C, Z)
    except linalg.LinAlgError as exc:
        raise SolverError(f"generalized eigensolve failed: {exc}") from exc
    if not (np.all(np.isfinite(values)) and np.all(np.isfinite(Y))):
        raise SolverError("generalized eigensolve produced non-finite values")
    return values, Y


def trailing_cluster_end(values, count: int, tol: float) -> int:
    """One past the last value chained to values[count - 1] under the cluster rule."""
    values = np.asarray(values, dtype=float)
    while count < len(values) and values[count] - values[count - 1] <= tol * (1.0 + abs(values[count - 1])):
        count += 1
    return count


def solve_complete_clusters(L: np.ndarray, Mb: np.ndarray, num_modes: int, tol: float):
    """Lowest eigenpairs of the pencil, at least num_modes, ending on a whole cluster.

    Solves for a few extra eigenvalues and keeps the modes that belong to the
    cluster of mode num_modes - 1. The solve grows until a value beyond that
    cluster is seen or every eigenvalue has been computed.

    Returns:
        (eigenvalues, Y) as from solve_pencil.
    """
    nb = L.shape[0]
    size = min(nb, num_modes + config.CLUSTER_PADDING)
    while True:
        values, Y = solve_pencil(L, Mb, size)
        count = trailing_cluster_end(values, num_modes, tol)
        if count < size or size == nb:
            break
        size = min(nb, 2 * size)
    if count > num_modes:
        logger.info("kept %d modes instead of %d to complete the cluster at sigma ~ %.6f",
                    count, num_modes, values[num_modes - 1])
    return values[:count], Y[:, :count]


def steklov_spectrum(mesh: TriangleMesh, num_modes: int, problem: SteklovProblem = None,
                     cluster_tol: float = None) -> Spectrum:
    """Solve the discrete Steklov problem for the lowest num_modes eigenpairs.

    A cluster that would be cut by num_modes is completed, so the spectrum
    may hold more modes than requested.

    Args:
        mesh: The mesh.
        num_modes: Number of eigenpairs (at most the boundary vertex count).
        problem: Pre-assembled problem for the same mesh.
        cluster_tol: Tolerance deciding which modes share the last cluster
            (config default). Pass the tolerance later used for clustering.

    Returns:
        Spectrum with harmonic extensions and per-mode residuals.

    Raises:
        ConfigError: num_modes out of range.
        SolverError: Factorization or eigensolver failure.
    """
    problem = problem or SteklovProblem(mesh)
    nb = problem.boundary.size
    if not 1 <= num_modes <= nb:
        raise ConfigError(f"num_modes must lie in 1..{nb} for {mesh.mesh_ref}, got {num_modes}")
    tol = config.CLUSTER_TOLERANCE if cluster_tol is None else cluster_tol

    L = problem.dtn
    Mb = problem.boundary_mass
    values, Y = solve_complete_clusters(L, Mb, num_modes, tol)
    Y = _fix_signs(Y)
    extensions = problem.extend(Y)

    MY = Mb @ Y
    dtn_residual = np.linalg.norm(L @ Y - MY * values, axis=0) / np.maximum(np.linalg.norm(MY, axis=0), np.finfo(float).tiny)
    energy = np.einsum("ik,ik->k", extensions, problem.K @ extensions)
    mass = np.einsum("ik,ik->k", Y, MY)
    rayleigh = np.abs(energy - values * mass) / mass
    harmonic = np.zeros(len(values))
    if problem.interior.size:
        harmonic = np.abs((problem.K @ extensions)[problem.interior]).max(axis=0)

    logger.debug("spectrum of %s: %s", mesh.mesh_ref, np.array2string(values, precision=6))
    return Spectrum(
        eigenvalues=values,
        boundary_modes=Y,
        extensions=extensions,
        boundary_indices=problem.boundary,
        boundary_mass=Mb,
        residuals={"dtn": dtn_residual, "rayleigh": rayleigh, "harmonic": harmonic},
        mesh_ref=mesh.mesh_ref,
        requested_modes=num_modes,
    )
