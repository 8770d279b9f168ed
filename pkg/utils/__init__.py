"""Utility functions module.

This module provides the mesh geometry helpers used throughout the
workbench.
"""

from utils.math_utils import (
    triangle_edge_vectors,
    triangle_areas,
    corner_cotangents,
    aspect_ratios,
    reflect_points,
    reflection_matrix,
    relative_residual,
)

__all__ = [
    'triangle_edge_vectors',
    'triangle_areas',
    'corner_cotangents',
    'aspect_ratios',
    'reflect_points',
    'reflection_matrix',
    'relative_residual',
]
