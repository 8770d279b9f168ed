"""Unit tests for stiffness and boundary mass assembly."""

import math

import numpy as np
import pytest
from scipy import io as sio

from errors import MeshError
from fem import (
    assemble_boundary_mass,
    assemble_stiffness,
    boundary_norm_squared,
    dirichlet_energy,
    equivariance_defect,
    export_matrix_market,
)
from mesh import TriangleMesh, build_symmetric_mesh, trace_boundary_loops
from surfaces import catalog


def make_mesh(vertices, triangles) -> TriangleMesh:
    triangles = np.asarray(triangles, dtype=int)
    return TriangleMesh(
        vertices=np.asarray(vertices, dtype=float),
        triangles=triangles,
        boundary_loops=trace_boundary_loops(triangles),
        plane_tags=[frozenset()] * len(vertices),
    )


@pytest.fixture
def right_triangle():
    return make_mesh([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]], [[0, 1, 2]])


@pytest.fixture(scope="module")
def disk_mesh():
    return build_symmetric_mesh(catalog("unit-disk"), (8, 32))


@pytest.fixture(scope="module")
def catenoid_mesh():
    return build_symmetric_mesh(catalog("critical-catenoid"), (20, 80))


class TestStiffness:
    """Tests for the cotangent stiffness matrix."""

    def test_right_triangle_weights(self, right_triangle):
        """The right angle contributes nothing, the 45 degree corners cot/2 = 0.5."""
        K = assemble_stiffness(right_triangle).toarray()
        expected = np.array([
            [1.0, -0.5, -0.5],
            [-0.5, 0.5, 0.0],
            [-0.5, 0.0, 0.5],
        ])
        assert np.abs(K - expected).max() < 1e-15

    def test_constants_in_kernel(self, catenoid_mesh):
        """Constant functions have zero energy."""
        K = assemble_stiffness(catenoid_mesh[0])
        assert np.abs(K @ np.ones(K.shape[0])).max() < 1e-12

    def test_exactly_symmetric(self, catenoid_mesh):
        """K equals its transpose bitwise."""
        K = assemble_stiffness(catenoid_mesh[0])
        assert abs(K - K.T).max() == 0.0

    def test_linear_energy_is_area(self, disk_mesh):
        """The energy of u = x1 on a planar mesh is its area."""
        mesh, _ = disk_mesh
        energy = dirichlet_energy(mesh, mesh.vertices[:, 0])
        assert abs(energy - mesh.triangle_areas().sum()) < 1e-12

    def test_positive_semidefinite(self, disk_mesh):
        """Energies of random functions are nonnegative."""
        mesh, _ = disk_mesh
        K = assemble_stiffness(mesh)
        rng = np.random.default_rng(3)
        for _ in range(10):
            assert dirichlet_energy(mesh, rng.standard_normal(mesh.vertex_count), K) >= 0.0

    def test_equivariant(self, catenoid_mesh):
        """P^T K P = K for every generator."""
        mesh, action = catenoid_mesh
        assert equivariance_defect(assemble_stiffness(mesh), action) <= 1e-12

    def test_degenerate_triangle(self):
        """A zero-area triangle cannot be assembled."""
        mesh = make_mesh(
            [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [2.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
            [[0, 1, 3], [1, 0, 2]],
        )
        with pytest.raises(MeshError):
            assemble_stiffness(mesh)

    def test_dimension_mismatch(self, right_triangle):
        """Vertex functions must have one value per vertex."""
        with pytest.raises(ValueError):
            dirichlet_energy(right_triangle, [1.0, 2.0])


class TestBoundaryMass:
    """Tests for the consistent boundary mass matrix."""

    def test_perimeter(self, right_triangle):
        """1^T M 1 is the boundary length."""
        M = assemble_boundary_mass(right_triangle)
        ones = np.ones(3)
        assert abs(ones @ M @ ones - (2.0 + math.sqrt(2.0))) < 1e-14

    def test_edge_integral(self, right_triangle):
        """Each edge integrates u^2 as L (a^2 + ab + b^2) / 3."""
        a, b = 0.7, -1.3
        expected = (a * a + a * b + b * b) / 3.0 + math.sqrt(2.0) * b * b / 3.0 + a * a / 3.0
        assert abs(boundary_norm_squared(right_triangle, [a, b, 0.0]) - expected) < 1e-14

    def test_interior_rows_empty(self, disk_mesh):
        """Interior vertices carry no boundary mass."""
        mesh, _ = disk_mesh
        M = assemble_boundary_mass(mesh)
        interior = np.setdiff1d(np.arange(mesh.vertex_count), mesh.boundary_vertices())
        assert abs(M[interior]).sum() == 0.0

    def test_disk_perimeter(self, disk_mesh):
        """The boundary mass of the disk mesh integrates to its polygon perimeter."""
        mesh, _ = disk_mesh
        ones = np.ones(mesh.vertex_count)
        assert abs(ones @ assemble_boundary_mass(mesh) @ ones - mesh.boundary_length()) < 1e-13

    def test_equivariant(self, catenoid_mesh):
        """The boundary mass commutes with the reflections."""
        mesh, action = catenoid_mesh
        assert equivariance_defect(assemble_boundary_mass(mesh), action) <= 1e-12


class TestExport:
    """Tests for Matrix Market export."""

    def test_round_trip(self, right_triangle, tmp_path):
        """The written matrix reads back with the same entries."""
        K = assemble_stiffness(right_triangle)
        path = export_matrix_market(K, tmp_path / "stiffness")
        assert path.suffix == ".mtx"
        assert np.abs(sio.mmread(str(path)).toarray() - K.toarray()).max() < 1e-15
