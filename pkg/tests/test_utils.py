"""Unit tests for geometry helpers."""

import math

import numpy as np

from utils import (
    aspect_ratios,
    corner_cotangents,
    reflect_points,
    reflection_matrix,
    relative_residual,
    triangle_areas,
    triangle_edge_vectors,
)

RIGHT = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
EQUILATERAL = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.5, math.sqrt(3.0) / 2.0, 0.0]])
ONE = np.array([[0, 1, 2]])


class TestTriangleGeometry:
    """Tests for per-triangle quantities."""

    def test_edge_vectors(self):
        """Edge k joins the two corners other than k."""
        e0, e1, e2 = triangle_edge_vectors(RIGHT, ONE)
        assert np.array_equal(e0[0], [-1.0, 1.0, 0.0])
        assert np.array_equal(e1[0], [0.0, -1.0, 0.0])
        assert np.array_equal(e2[0], [1.0, 0.0, 0.0])
        assert np.array_equal(e0 + e1 + e2, np.zeros((1, 3)))

    def test_areas(self):
        """Areas of the unit right triangle and the unit equilateral triangle."""
        assert triangle_areas(RIGHT, ONE)[0] == 0.5
        assert abs(triangle_areas(EQUILATERAL, ONE)[0] - math.sqrt(3.0) / 4.0) < 1e-15

    def test_area_ignores_placement(self):
        """Rotating a triangle out of the plane keeps its area."""
        c, s = math.cos(0.7), math.sin(0.7)
        rotation = np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])
        assert abs(triangle_areas(RIGHT @ rotation.T, ONE)[0] - 0.5) < 1e-15

    def test_cotangents(self):
        """Right angle gives 0, the two 45 degree corners give 1."""
        cot = corner_cotangents(RIGHT, ONE)[0]
        assert abs(cot[0]) < 1e-15
        assert abs(cot[1] - 1.0) < 1e-15
        assert abs(cot[2] - 1.0) < 1e-15

    def test_equilateral_cotangents(self):
        """Every corner of an equilateral triangle has cotangent 1/sqrt(3)."""
        assert np.allclose(corner_cotangents(EQUILATERAL, ONE), 1.0 / math.sqrt(3.0), atol=1e-15)

    def test_aspect_ratios(self):
        """Equilateral triangles are the best shaped."""
        assert abs(aspect_ratios(EQUILATERAL, ONE)[0] - 2.0 / math.sqrt(3.0)) < 1e-14
        assert abs(aspect_ratios(RIGHT, ONE)[0] - 2.0) < 1e-14


class TestReflections:
    """Tests for plane reflections."""

    def test_coordinate_plane_is_exact(self):
        """Reflecting through x2 = 0 only flips the sign of x2."""
        rng = np.random.default_rng(3)
        points = rng.standard_normal((50, 3))
        reflected = reflect_points(points, np.array([0.0, 1.0, 0.0]))
        assert np.array_equal(reflected[:, 1], -points[:, 1])
        assert np.array_equal(reflected[:, [0, 2]], points[:, [0, 2]])

    def test_involution(self):
        """Reflecting twice through a tilted plane returns the points."""
        normal = np.array([1.0, -1.0, 0.0]) / math.sqrt(2.0)
        points = np.random.default_rng(4).standard_normal((20, 3))
        assert np.allclose(reflect_points(reflect_points(points, normal), normal), points, atol=1e-14)

    def test_matrix(self):
        """The reflection matrix is orthogonal with determinant -1 and agrees with reflect_points."""
        normal = np.array([0.0, 0.6, 0.8])
        matrix = reflection_matrix(normal)
        assert np.allclose(matrix @ matrix.T, np.eye(3), atol=1e-15)
        assert abs(np.linalg.det(matrix) + 1.0) < 1e-14
        points = np.random.default_rng(5).standard_normal((10, 3))
        assert np.allclose(points @ matrix.T, reflect_points(points, normal), atol=1e-14)


class TestRelativeResidual:
    """Tests for relative_residual."""

    def test_ratio(self):
        """Ratio of Euclidean norms."""
        assert relative_residual(np.array([3.0, 4.0]), np.array([0.0, 10.0])) == 0.5

    def test_zero_reference(self):
        """A vanishing reference gives infinity."""
        assert relative_residual(np.ones(2), np.zeros(2)) == math.inf

