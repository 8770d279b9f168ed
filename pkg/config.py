"""Workbench configuration loader that exposes typed settings backed by JSON."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Tuple

DEFAULT_SETTINGS_PATH = Path(__file__).resolve().parent / "config" / "settings.json"


@dataclass
class MeshSettings:
    degenerateAreaRatio: float
    sphereTolerance: float


@dataclass
class SolverSettings:
    clusterTolerance: float
    clusterPadding: int
    orthonormalityTolerance: float


@dataclass
class NodalSettings:
    zeroThreshold: float
    courantSamples: int
    courantSeed: int


@dataclass
class SymmetrySettings:
    parityTolerance: float
    splitTolerance: float


@dataclass
class VerificationSettings:
    orthogonalityTolerance: float
    freeBoundaryTolerance: float
    rayleighTolerance: float
    eigenvalueGap: float


@dataclass
class SweepSettings:
    rhoMin: float
    rhoMax: float
    modes: int


@dataclass
class OutputSettings:
    schemaVersion: int
    significantDigits: int


@dataclass
class DefaultsSettings:
    surface: str
    resolution: Tuple[int, int]
    modes: int
    tolEigen: float
    format: str


@dataclass
class Settings:
    mesh: MeshSettings
    solver: SolverSettings
    nodal: NodalSettings
    symmetry: SymmetrySettings
    verification: VerificationSettings
    sweep: SweepSettings
    output: OutputSettings
    defaults: DefaultsSettings


def settings_path() -> Path:
    """Return the settings file, honouring the STEKLOV_SETTINGS override."""
    override = os.getenv("STEKLOV_SETTINGS")
    if override:
        return Path(override)
    return DEFAULT_SETTINGS_PATH


def _load_settings_json(path: Path) -> dict:
    with path.open("r", encoding="utf-8") as fh:
        return json.load(fh)


def load_settings(path: Path = None) -> Settings:
    raw = _load_settings_json(path or settings_path())

    defaults_raw = raw["defaults"]
    return Settings(
        mesh=MeshSettings(**raw["mesh"]),
        solver=SolverSettings(**raw["solver"]),
        nodal=NodalSettings(**raw["nodal"]),
        symmetry=SymmetrySettings(**raw["symmetry"]),
        verification=VerificationSettings(**raw["verification"]),
        sweep=SweepSettings(**raw["sweep"]),
        output=OutputSettings(**raw["output"]),
        defaults=DefaultsSettings(
            **{
                **defaults_raw,
                "resolution": tuple(defaults_raw["resolution"]),
            }
        ),
    )


SETTINGS = load_settings()

# Flat constants
DEGENERATE_AREA_RATIO = SETTINGS.mesh.degenerateAreaRatio
SPHERE_TOLERANCE = SETTINGS.mesh.sphereTolerance

CLUSTER_TOLERANCE = SETTINGS.solver.clusterTolerance
CLUSTER_PADDING = SETTINGS.solver.clusterPadding
ORTHONORMALITY_TOLERANCE = SETTINGS.solver.orthonormalityTolerance

NODAL_ZERO_THRESHOLD = SETTINGS.nodal.zeroThreshold
COURANT_SAMPLES = SETTINGS.nodal.courantSamples
COURANT_SEED = SETTINGS.nodal.courantSeed

PARITY_TOLERANCE = SETTINGS.symmetry.parityTolerance
SPLIT_TOLERANCE = SETTINGS.symmetry.splitTolerance

ORTHOGONALITY_TOLERANCE = SETTINGS.verification.orthogonalityTolerance
FREE_BOUNDARY_TOLERANCE = SETTINGS.verification.freeBoundaryTolerance
RAYLEIGH_TOLERANCE = SETTINGS.verification.rayleighTolerance
EIGENVALUE_GAP = SETTINGS.verification.eigenvalueGap

SWEEP_RHO_MIN = SETTINGS.sweep.rhoMin
SWEEP_RHO_MAX = SETTINGS.sweep.rhoMax
SWEEP_MODES = SETTINGS.sweep.modes

SCHEMA_VERSION = SETTINGS.output.schemaVersion
SIGNIFICANT_DIGITS = SETTINGS.output.significantDigits
