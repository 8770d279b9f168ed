"""Antisymmetric and symmetric parts of vertex functions under a reflection.

With a generator permutation P (reflecting vertex v lands on vertex P[v]),
the pulled-back function is u[P], and
    A u = (u - u[P]) / 2,    S u = (u + u[P]) / 2.
"""

import numpy as np


def _check(u, permutation) -> tuple:
    u = np.asarray(u, dtype=float)
    permutation = np.asarray(permutation, dtype=int)
    if u.shape[0] != permutation.shape[0]:
        raise ValueError(f"function has {u.shape[0]} values but the permutation has {permutation.shape[0]}")
    return u, permutation


def reflect_function(u, permutation) -> np.ndarray:
    """u composed with the reflection: u[P]."""
    u, permutation = _check(u, permutation)
    return u[permutation]


def antisymmetrize(u, permutation) -> np.ndarray:
    """A u = (u - u[P]) / 2."""
    u, permutation = _check(u, permutation)
    return 0.5 * (u - u[permutation])


def symmetrize(u, permutation) -> np.ndarray:
    """S u = (u + u[P]) / 2."""
    u, permutation = _check(u, permutation)
    return 0.5 * (u + u[permutation])
