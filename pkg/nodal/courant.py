"""Two-nodal-domain check for the first nonzero eigenvalue cluster."""

import logging
from dataclasses import dataclass, field
from typing import List

import numpy as np

import config
from mesh import TriangleMesh
from nodal.domains import nodal_domains
from steklov import Spectrum

logger = logging.getLogger(__name__)

EXPECTED_DOMAINS = 2


@dataclass
class CourantSample:
    """Nodal count of one function drawn from the cluster subspace.

    Attributes:
        label: How the coefficients were chosen ("basis", "pair" or "random").
        coefficients: Coefficients in the cluster basis.
        domain_count: Number of nodal domains.
        touches_boundary: Whether every nodal domain reaches the boundary.
    """
    label: str
    coefficients: List[float]
    domain_count: int
    touches_boundary: bool

    @property
    def passed(self) -> bool:
        return self.domain_count == EXPECTED_DOMAINS


@dataclass
class CourantReport:
    """Result of courant_check; violations are data, not errors."""
    cluster_value: float
    multiplicity: int
    samples: List[CourantSample] = field(default_factory=list)

    @property
    def violations(self) -> List[CourantSample]:
        return [s for s in self.samples if not s.passed]

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def all_touch_boundary(self) -> bool:
        return all(s.touches_boundary for s in self.samples)

    def to_dict(self) -> dict:
        return {
            "cluster_value": self.cluster_value,
            "multiplicity": self.multiplicity,
            "samples": len(self.samples),
            "violations": [
                {"label": s.label, "coefficients": s.coefficients, "domain_count": s.domain_count}
                for s in self.violations
            ],
            "all_domains_touch_boundary": self.all_touch_boundary,
            "passed": self.passed,
        }


def cluster_samples(multiplicity: int, random_count: int, seed: int):
    """Deterministic coefficient vectors: basis vectors, pairwise sums, seeded normals."""
    samples = []
    for k in range(multiplicity):
        samples.append(("basis", np.eye(multiplicity)[k]))
    for a in range(multiplicity):
        for b in range(a + 1, multiplicity):
            samples.append(("pair", np.eye(multiplicity)[a] + np.eye(multiplicity)[b]))
    if multiplicity > 1:
        rng = np.random.default_rng(seed)
        for _ in range(random_count):
            samples.append(("random", rng.standard_normal(multiplicity)))
    return samples


def courant_check(spectrum: Spectrum, mesh: TriangleMesh, tol: float = None, tau: float = None,
                  random_count: int = None, seed: int = None) -> CourantReport:
    """Count nodal domains across the sigma_1 cluster.

    Args:
        spectrum: Spectrum holding at least the sigma_1 cluster.
        mesh: The mesh the spectrum was computed on.
        tol: Cluster tolerance.
        tau: Nodal zero threshold.
        random_count: Number of random combinations (config default).
        seed: Seed of the random combinations (config default).

    Returns:
        CourantReport listing every sampled function.
    """
    cluster = spectrum.first_nonzero_cluster(tol)
    basis = spectrum.extensions[:, list(cluster.indices)]
    boundary = mesh.boundary_vertices()
    report = CourantReport(cluster_value=cluster.value, multiplicity=cluster.multiplicity)
    samples = cluster_samples(
        cluster.multiplicity,
        config.COURANT_SAMPLES if random_count is None else random_count,
        config.COURANT_SEED if seed is None else seed,
    )
    for label, coefficients in samples:
        decomposition = nodal_domains(mesh, basis @ coefficients, tau)
        touching = decomposition.domains_touching(boundary)
        report.samples.append(CourantSample(
            label=label,
            coefficients=[float(c) for c in coefficients],
            domain_count=decomposition.domain_count,
            touches_boundary=len(touching) == decomposition.domain_count,
        ))
    if not report.passed:
        logger.info("Courant check on %s: %d of %d samples violate", spectrum.mesh_ref,
                    len(report.violations), len(report.samples))
    return report
