"""Reflection symmetry of eigenfunctions.

This module implements the antisymmetric and symmetric parts of vertex
functions, the parity classification of eigenfunctions (with cluster
splitting) and the orthogonality checks against coordinate functions.
"""

from symmetry.operators import antisymmetrize, reflect_function, symmetrize
from symmetry.parity import (
    EVEN,
    MIXED,
    ODD,
    ModeParity,
    ParityReport,
    ParityVector,
    SplitFailure,
    classify,
    parity_of,
    parity_table_csv,
    split_residuals,
)
from symmetry.orthogonality import UNIT_EIGENVALUE_GAP, coordinate_orthogonality, eigenfunction_orthogonal_to_coordinates

__all__ = [
    'antisymmetrize',
    'reflect_function',
    'symmetrize',
    'EVEN',
    'MIXED',
    'ODD',
    'ModeParity',
    'ParityReport',
    'ParityVector',
    'SplitFailure',
    'classify',
    'parity_of',
    'parity_table_csv',
    'split_residuals',
    'UNIT_EIGENVALUE_GAP',
    'coordinate_orthogonality',
    'eigenfunction_orthogonal_to_coordinates',
]
