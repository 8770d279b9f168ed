"""Parity of eigenfunctions under the reflection generators.

Eigenvalue clusters are first rotated into a basis that simultaneously
diagonalizes the generator involutions: for each generator in turn, the
involution is projected onto every current sub-block of the cluster
(using the boundary mass inner product) and the block is split into its
+1 and -1 eigenspaces.
"""

import csv
import io
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

import config
from mesh import GroupAction
from steklov import Spectrum, SteklovProblem
from symmetry.operators import antisymmetrize, symmetrize
from utils import relative_residual

logger = logging.getLogger(__name__)

EVEN = "even"
ODD = "odd"
MIXED = "mixed"


@dataclass(frozen=True)
class ParityVector:
    """Per-generator parity labels.

    Attributes:
        labels: "even", "odd" or "mixed" for each generator.
        tolerance: Relative tolerance used for the labels.
    """
    labels: Tuple[str, ...]
    tolerance: float

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)


def parity_of(u, permutations: Sequence[np.ndarray], tol: float = None) -> ParityVector:
    """Label u even when |A u| <= tol |u|, odd when |S u| <= tol |u|, mixed otherwise."""
    tol = config.PARITY_TOLERANCE if tol is None else tol
    u = np.asarray(u, dtype=float)
    scale = float(np.linalg.norm(u))
    labels = []
    for perm in permutations:
        if np.linalg.norm(antisymmetrize(u, perm)) <= tol * scale:
            labels.append(EVEN)
        elif np.linalg.norm(symmetrize(u, perm)) <= tol * scale:
            labels.append(ODD)
        else:
            labels.append(MIXED)
    return ParityVector(labels=tuple(labels), tolerance=tol)


@dataclass
class ModeParity:
    """One mode of the split basis with its parity."""
    index: int
    eigenvalue: float
    cluster: int
    parity: ParityVector
    boundary_mode: np.ndarray = field(repr=False)
    extension: np.ndarray = field(repr=False)


@dataclass
class SplitFailure:
    """A cluster whose projected involution has eigenvalues away from +-1."""
    cluster: int
    generator: int
    eigenvalues: List[float]


@dataclass
class ParityReport:
    """Parity classification of a spectrum."""
    modes: List[ModeParity]
    failures: List[SplitFailure]
    tolerance: float

    @property
    def passed(self) -> bool:
        return not self.failures and all(MIXED not in m.parity.labels for m in self.modes)

    def parities(self) -> List[Tuple[str, ...]]:
        return [m.parity.labels for m in self.modes]

    def to_dict(self) -> dict:
        return {
            "tolerance": self.tolerance,
            "modes": [
                {"index": m.index, "eigenvalue": m.eigenvalue, "cluster": m.cluster, "parity": list(m.parity.labels)}
                for m in self.modes
            ],
            "split_failures": [
                {"cluster": f.cluster, "generator": f.generator, "eigenvalues": f.eigenvalues} for f in self.failures
            ],
            "passed": self.passed,
        }


def _split_cluster(V: np.ndarray, Mb: np.ndarray, boundary_perms, split_tol: float):
    """Orthogonal coefficient matrix R whose columns diagonalize every generator on span(V)."""
    blocks = [np.eye(V.shape[1])]
    failures = []
    for k, perm in enumerate(boundary_perms):
        next_blocks = []
        for B in blocks:
            W = V @ B
            Q = W.T @ Mb @ W[perm]
            Q = 0.5 * (Q + Q.T)
            values, vectors = linalg.eigh(Q)
            if np.any(np.minimum(np.abs(values - 1.0), np.abs(values + 1.0)) > split_tol):
                failures.append((k, values.tolist()))
            plus = vectors[:, values >= 0.0]
            minus = vectors[:, values < 0.0]
            next_blocks.extend(B @ part for part in (plus, minus) if part.shape[1])
        blocks = next_blocks
    return np.hstack(blocks), failures


def classify(spectrum: Spectrum, action: GroupAction, tol: float = None,
             cluster_tol: float = None, split_tol: float = None) -> ParityReport:
    """Parity vector of every mode after splitting eigenvalue clusters.

    Args:
        spectrum: Spectrum of the mesh the action acts on.
        action: Reflection group action.
        tol: Parity tolerance (relative).
        cluster_tol: Cluster tolerance.
        split_tol: Allowed distance of projected involution eigenvalues from +-1.

    Returns:
        ParityReport; split failures are reported and logged, not raised.
    """
    tol = config.PARITY_TOLERANCE if tol is None else tol
    split_tol = config.SPLIT_TOLERANCE if split_tol is None else split_tol
    boundary = spectrum.boundary_indices
    boundary_perms = [action.boundary_permutation(k, boundary) for k in range(len(action.generators))]
    modes: List[ModeParity] = []
    failures: List[SplitFailure] = []

    for c, cluster in enumerate(spectrum.clusters(cluster_tol)):
        idx = list(cluster.indices)
        V = spectrum.boundary_modes[:, idx]
        R, split_failures = _split_cluster(V, spectrum.boundary_mass, boundary_perms, split_tol)
        for generator, values in split_failures:
            logger.warning("cluster %d (sigma ~ %.6f) does not split under generator %d: %s",
                           c, cluster.value, generator, values)
            failures.append(SplitFailure(cluster=c, generator=generator, eigenvalues=values))
        sigmas = (R * R).T @ spectrum.eigenvalues[idx]
        rotated_b = V @ R
        rotated_ext = spectrum.extensions[:, idx] @ R
        pivots = np.argmax(np.abs(rotated_b), axis=0)
        signs = np.sign(rotated_b[pivots, np.arange(len(idx))])
        signs[signs == 0] = 1.0
        for j in range(len(idx)):
            extension = rotated_ext[:, j] * signs[j]
            modes.append(ModeParity(
                index=idx[j],
                eigenvalue=float(sigmas[j]),
                cluster=c,
                parity=parity_of(extension, action.vertex_permutations, tol),
                boundary_mode=rotated_b[:, j] * signs[j],
                extension=extension,
            ))
    return ParityReport(modes=modes, failures=failures, tolerance=tol)


def split_residuals(report: ParityReport, action: GroupAction, problem: SteklovProblem) -> List[List[Optional[float]]]:
    """Residuals of A u and S u as eigenvectors of the pencil, per mode and generator.

    Each entry is the pair (residual of A u, residual of S u); a part whose
    boundary norm is below the parity tolerance reports None.
    """
    L = problem.dtn
    Mb = problem.boundary_mass
    result = []
    for mode in report.modes:
        row = []
        for perm in action.vertex_permutations:
            pair = []
            for part in (antisymmetrize(mode.extension, perm), symmetrize(mode.extension, perm)):
                y = part[problem.boundary]
                My = Mb @ y
                if np.linalg.norm(My) <= report.tolerance * float(np.linalg.norm(Mb @ mode.boundary_mode)):
                    pair.append(None)
                else:
                    pair.append(relative_residual(L @ y - mode.eigenvalue * My, My))
            row.append(pair)
        result.append(row)
    return result


def parity_table_csv(modes: Sequence[ModeParity]) -> str:
    """CSV parity table: mode index, eigenvalue, one column per generator."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    generators = len(modes[0].parity.labels) if modes else 0
    writer.writerow(["mode", "eigenvalue"] + [f"generator{k + 1}" for k in range(generators)])
    for m in modes:
        writer.writerow([m.index, f"{m.eigenvalue:.{config.SIGNIFICANT_DIGITS}g}"] + list(m.parity.labels))
    return buffer.getvalue()
