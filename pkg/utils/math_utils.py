"""Vectorized geometry helpers for triangle meshes in R^3.

All functions are pure and operate on numpy arrays:
    - Triangle areas and corner cotangents
    - Reflections through planes with unit normals
    - Relative residual norms

Usage:
    from utils import triangle_areas, corner_cotangents
"""

from typing import Tuple

import numpy as np


def triangle_edge_vectors(vertices: np.ndarray, triangles: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return the edge vectors opposite each corner of every triangle.

    Args:
        vertices: (n, 3) vertex coordinates.
        triangles: (m, 3) vertex indices.

    Returns:
        Tuple (e0, e1, e2) where e_k runs between the two corners other
        than k, following the triangle orientation.
    """
    p0 = vertices[triangles[:, 0]]
    p1 = vertices[triangles[:, 1]]
    p2 = vertices[triangles[:, 2]]
    return p2 - p1, p0 - p2, p1 - p0


def triangle_areas(vertices: np.ndarray, triangles: np.ndarray) -> np.ndarray:
    """Area of each triangle (half the cross product norm)."""
    p0 = vertices[triangles[:, 0]]
    cross = np.cross(vertices[triangles[:, 1]] - p0, vertices[triangles[:, 2]] - p0)
    return 0.5 * np.linalg.norm(cross, axis=1)


def corner_cotangents(vertices: np.ndarray, triangles: np.ndarray) -> np.ndarray:
    """Cotangent of the interior angle at each corner.

    The cotangent at corner k is (a . b) / |a x b| where a and b are the
    two edges leaving corner k. Only the induced metric enters.

    Returns:
        (m, 3) array, column k holding the cotangent at corner k.
    """
    cot = np.empty(triangles.shape, dtype=float)
    for k in range(3):
        origin = vertices[triangles[:, k]]
        a = vertices[triangles[:, (k + 1) % 3]] - origin
        b = vertices[triangles[:, (k + 2) % 3]] - origin
        dot = np.einsum("ij,ij->i", a, b)
        cross = np.linalg.norm(np.cross(a, b), axis=1)
        cot[:, k] = dot / cross
    return cot


def aspect_ratios(vertices: np.ndarray, triangles: np.ndarray) -> np.ndarray:
    """Longest edge over the altitude onto it, per triangle (1.15 for equilateral)."""
    edges = triangle_edge_vectors(vertices, triangles)
    lengths = np.stack([np.linalg.norm(e, axis=1) for e in edges], axis=1)
    longest = lengths.max(axis=1)
    areas = triangle_areas(vertices, triangles)
    return longest * longest / (2.0 * areas)


def reflect_points(points: np.ndarray, normal: np.ndarray) -> np.ndarray:
    """Reflect points through the plane through the origin with unit normal.

    For coordinate normals the result is exact: only the matching
    coordinate changes sign.
    """
    normal = np.asarray(normal, dtype=float)
    heights = points @ normal
    return points - 2.0 * np.outer(heights, normal)


def reflection_matrix(normal: np.ndarray) -> np.ndarray:
    """3x3 matrix of the reflection through the plane with unit normal."""
    normal = np.asarray(normal, dtype=float)
    return np.eye(3) - 2.0 * np.outer(normal, normal)


def relative_residual(value: np.ndarray, reference: np.ndarray) -> float:
    """Return |value| / |reference| (inf when the reference vanishes)."""
    denominator = float(np.linalg.norm(reference))
    if denominator == 0.0:
        return float("inf")
    return float(np.linalg.norm(value)) / denominator
