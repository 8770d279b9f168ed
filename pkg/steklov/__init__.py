"""Discrete Steklov problem.

This module forms the Dirichlet-to-Neumann matrix by Schur complement,
solves the generalized eigenproblem on the boundary and provides harmonic
extension, Rayleigh quotients and the free-boundary verifier.
"""

from steklov.dtn import InteriorSolver, SteklovProblem, dtn_operator, harmonic_extension, split_vertices
from steklov.spectrum import (
    Cluster,
    Spectrum,
    cluster_values,
    solve_complete_clusters,
    solve_pencil,
    steklov_spectrum,
    trailing_cluster_end,
)
from steklov.verify import (
    COORDINATE_NAMES,
    boundary_mean,
    boundary_radius_defect,
    coordinate_residual,
    max_coordinate_residual,
    rayleigh_quotient,
    richardson_order,
)
from steklov.report import spectrum_report

__all__ = [
    'InteriorSolver',
    'SteklovProblem',
    'dtn_operator',
    'harmonic_extension',
    'split_vertices',
    'Cluster',
    'Spectrum',
    'cluster_values',
    'solve_complete_clusters',
    'solve_pencil',
    'steklov_spectrum',
    'trailing_cluster_end',
    'COORDINATE_NAMES',
    'boundary_mean',
    'boundary_radius_defect',
    'coordinate_residual',
    'max_coordinate_residual',
    'rayleigh_quotient',
    'richardson_order',
    'spectrum_report',
]
