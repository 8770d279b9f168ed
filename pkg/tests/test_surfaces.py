"""Unit tests for catalog surfaces and boundary conormals."""

import math

import numpy as np
import pytest

from errors import ConfigError
from surfaces import (
    CATALOG_NAMES,
    AnnulusSurface,
    CatenoidParams,
    CatenoidSurface,
    DiskSurface,
    boundary_conormal,
    catalog,
    catenoid_point,
    catenoid_scale,
    parse_surface_spec,
    solve_rho0,
)


class TestRho0:
    """Tests for the critical half-height."""

    def test_value(self):
        """rho0 is about 1.19967864."""
        assert abs(solve_rho0() - 1.19967864) < 1e-8

    def test_residual(self):
        """rho0 tanh rho0 = 1 to 1e-12."""
        rho = solve_rho0()
        assert abs(rho * math.tanh(rho) - 1.0) < 1e-12

    def test_deterministic(self):
        """Repeated solves return the identical float."""
        assert solve_rho0() == solve_rho0()

    def test_bad_tolerance(self):
        """Nonpositive tolerance is a configuration error."""
        with pytest.raises(ConfigError):
            solve_rho0(0.0)


class TestCatenoid:
    """Tests for catenoid charts."""

    def test_waist_point(self):
        """The waist at angle 0 sits at 1 / (rho0 cosh rho0) on the x1 axis."""
        rho = solve_rho0()
        p = catenoid_point(0.0, 0.0, CatenoidParams.critical())
        assert abs(p[0] - 1.0 / (rho * math.cosh(rho))) < 1e-15
        assert abs(p[0] - 0.4605) < 1e-3
        assert p[1] == 0.0 and p[2] == 0.0

    def test_boundary_on_sphere(self):
        """Boundary circles have unit norm."""
        params = CatenoidParams.critical()
        for theta in np.linspace(0.0, 2.0 * math.pi, 13):
            for r in (params.rho, -params.rho):
                assert abs(np.linalg.norm(catenoid_point(r, theta, params)) - 1.0) < 1e-14

    def test_normalized_family_on_sphere(self):
        """Every normalized member has its boundary on the unit sphere."""
        for rho in (0.5, 0.8, 1.6):
            surface = CatenoidSurface(CatenoidParams.normalized(rho))
            assert surface.boundary_radius_residual() < 1e-14

    def test_scale_at_critical(self):
        """The normalizing scale at rho0 is the critical scale."""
        rho = solve_rho0()
        assert abs(catenoid_scale(rho) - CatenoidParams.critical().scale) < 1e-14

    def test_half_turn(self):
        """theta + pi negates the first two coordinates."""
        params = CatenoidParams.critical()
        a = catenoid_point(0.3, 0.7, params)
        b = catenoid_point(0.3, 0.7 + math.pi, params)
        assert np.allclose(b, [-a[0], -a[1], a[2]], atol=1e-15)

    def test_out_of_range(self):
        """Heights beyond rho are rejected."""
        with pytest.raises(ConfigError):
            catenoid_point(2.0, 0.0, CatenoidParams.critical())

    def test_nonpositive_params(self):
        """Nonpositive rho or scale is rejected."""
        with pytest.raises(ConfigError):
            CatenoidParams(rho=-1.0, scale=1.0)
        with pytest.raises(ConfigError):
            CatenoidParams.normalized(0.0)

    def test_immersion(self):
        """The chart is an immersion."""
        assert CatenoidSurface(CatenoidParams.critical()).check_immersion() > 0.0

    def test_critical_flag(self):
        """Only the rho0 member is critical."""
        assert catalog("critical-catenoid").is_critical
        assert not catalog("catenoid:0.8").is_critical


class TestConormal:
    """Tests for outward boundary conormals."""

    def test_critical_conormal_is_position(self):
        """On the critical catenoid the conormal equals the position vector."""
        surface = catalog("critical-catenoid")
        rho = surface.params.rho
        for theta in np.linspace(0.0, 2.0 * math.pi, 9):
            for r in (rho, -rho):
                eta = boundary_conormal(surface, (r, theta))
                assert np.abs(eta - surface.point(r, theta)).max() < 1e-10

    def test_noncritical_conormal_differs(self):
        """At rho = 0.8 the conormal is far from the position vector."""
        surface = catalog("catenoid:0.8")
        eta = boundary_conormal(surface, (0.8, 0.3))
        assert np.abs(eta - surface.point(0.8, 0.3)).max() > 0.1

    def test_unit_length(self):
        """Conormals have unit length."""
        surface = catalog("catenoid:0.8")
        for r in (0.8, -0.8):
            assert abs(np.linalg.norm(boundary_conormal(surface, (r, 1.1))) - 1.0) < 1e-14

    def test_disk_conormal_radial(self):
        """The disk conormal is the radial direction."""
        theta = 0.9
        eta = boundary_conormal(DiskSurface(), (1.0, theta))
        assert np.allclose(eta, [math.cos(theta), math.sin(theta), 0.0], atol=1e-14)

    def test_annulus_inner_conormal_points_inward(self):
        """On the inner circle the outward conormal points toward the origin."""
        eta = boundary_conormal(AnnulusSurface(0.5), (0.5, 0.0))
        assert np.allclose(eta, [-1.0, 0.0, 0.0], atol=1e-14)

    def test_interior_point_rejected(self):
        """An interior parameter has no conormal."""
        with pytest.raises(ConfigError):
            boundary_conormal(catalog("critical-catenoid"), (0.1, 0.0))


class TestReparametrize:
    """Tests for symmetry reparametrizations."""

    @pytest.mark.parametrize("axis", [0, 1, 2])
    def test_mirror_image(self, axis):
        """chart(reparametrize(p)) is the reflected chart(p)."""
        surface = catalog("critical-catenoid")
        for u, v in [(0.2, 0.4), (-0.9, 2.5), (1.1, 5.9)]:
            image = surface.point(*surface.reparametrize(axis, u, v))
            mirrored = np.array(surface.point(u, v), dtype=float)
            mirrored[axis] = -mirrored[axis]
            assert np.abs(image - mirrored).max() < 1e-12

    def test_disk_has_no_vertical_symmetry(self):
        """The disk is not symmetric through x3 = 0 in the catalog."""
        with pytest.raises(ConfigError):
            DiskSurface().reparametrize(2, 0.5, 0.0)


class TestCatalog:
    """Tests for surface lookup by name."""

    def test_names(self):
        """Catalog entries carry their names and symmetry axes."""
        assert catalog("critical-catenoid").symmetry_axes == (0, 1, 2)
        assert catalog("unit-disk").symmetry_axes == (0, 1)
        assert catalog("unit-disk").topology == "disk"
        assert catalog("flat-annulus:0.5").boundary_u == (0.5, 1.0)
        assert len(CATALOG_NAMES) == 4

    def test_parse_forms(self):
        """Colon and parenthesized parameters, case and spaces are accepted."""
        assert parse_surface_spec("catenoid(0.8)").params.rho == 0.8
        assert parse_surface_spec(" Catenoid:0.8 ").params.rho == 0.8
        assert parse_surface_spec("flat-annulus(0.25)").inner_radius == 0.25
        assert parse_surface_spec("UNIT-DISK").name == "unit-disk"

    @pytest.mark.parametrize("name", ["", "torus", "catenoid", "catenoid:abc", "unit-disk:2", "flat-annulus:1.5"])
    def test_bad_names(self, name):
        """Unknown names and invalid parameters raise ConfigError."""
        with pytest.raises(ConfigError):
            parse_surface_spec(name)

    def test_symmetry_planes(self):
        """Symmetry planes are coordinate normals."""
        planes = catalog("critical-catenoid").symmetry_planes
        assert np.array_equal(np.vstack(planes), np.eye(3))
