"""Finite element assembly.

This module assembles the P1 cotangent stiffness matrix and the consistent
boundary mass matrix, the two ingredients of the discrete Steklov problem.
"""

from fem.assembly import (
    SparseSymMatrix,
    assemble_boundary_mass,
    assemble_stiffness,
    boundary_norm_squared,
    dirichlet_energy,
    equivariance_defect,
    export_matrix_market,
)

__all__ = [
    'SparseSymMatrix',
    'assemble_boundary_mass',
    'assemble_stiffness',
    'boundary_norm_squared',
    'dirichlet_energy',
    'equivariance_defect',
    'export_matrix_market',
]
