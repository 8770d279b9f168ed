"""Shared meshes and spectra for the test suite.

Solves are session scoped: building a DtN matrix at the finer resolutions
takes a few seconds and many tests read the same spectrum.
"""

from dataclasses import dataclass

import pytest

from mesh import GroupAction, TriangleMesh, build_symmetric_mesh
from steklov import Spectrum, SteklovProblem, steklov_spectrum
from surfaces import catalog


@dataclass
class Solved:
    """One meshed and solved catalog surface."""
    surface: object
    mesh: TriangleMesh
    action: GroupAction
    problem: SteklovProblem
    spectrum: Spectrum


def solve(name, resolution, num_modes=8) -> Solved:
    surface = catalog(name)
    mesh, action = build_symmetric_mesh(surface, resolution)
    problem = SteklovProblem(mesh)
    return Solved(surface, mesh, action, problem, steklov_spectrum(mesh, num_modes, problem))


@pytest.fixture(scope="session")
def catenoid_coarse() -> Solved:
    return solve("critical-catenoid", (20, 80))


@pytest.fixture(scope="session")
def catenoid_medium() -> Solved:
    return solve("critical-catenoid", (40, 160))


@pytest.fixture(scope="session")
def catenoid_fine() -> Solved:
    return solve("critical-catenoid", (80, 320))


@pytest.fixture(scope="session")
def catenoid_noncritical() -> Solved:
    return solve("catenoid:0.8", (40, 160))


@pytest.fixture(scope="session")
def disk() -> Solved:
    return solve("unit-disk", (32, 128))


@pytest.fixture(scope="session")
def annulus() -> Solved:
    return solve("flat-annulus:0.5", (32, 192))
