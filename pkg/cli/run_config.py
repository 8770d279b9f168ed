"""Validated run parameters built from command line flags and settings defaults."""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

import config
from errors import ConfigError, MeshError
from mesh import check_resolution
from surfaces import ParametricSurface, parse_surface_spec

FORMATS = ("json", "csv")
MESH_FORMATS = ("off", "obj")

_RESOLUTION = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")


def parse_resolution(text) -> Tuple[int, int]:
    """Parse "WxH" (or a pair) into two positive integers."""
    if isinstance(text, (tuple, list)):
        if len(text) != 2:
            raise ConfigError(f"resolution needs two values, got {text!r}")
        values = tuple(int(v) for v in text)
    else:
        match = _RESOLUTION.match(str(text))
        if not match:
            raise ConfigError(f"resolution must look like 40x160, got {text!r}")
        values = (int(match.group(1)), int(match.group(2)))
    if min(values) <= 0:
        raise ConfigError(f"resolution entries must be positive, got {values}")
    return values


def _positive(name: str, value: float) -> None:
    if value is None or not value > 0.0:
        raise ConfigError(f"{name} must be positive, got {value!r}")


@dataclass
class RunConfig:
    """Parameters of one spectrum or verify run.

    Attributes:
        surface: Catalog name as typed on the command line.
        resolution: (radial, angular) grid counts.
        num_modes: Number of eigenpairs to compute.
        tol_eigen: Relative eigenvalue cluster tolerance.
        tol_parity: Relative parity tolerance.
        nodal_tau: Relative nodal zero threshold.
        out: Report destination (stdout when None).
        report_format: "json" or "csv".
        export_mesh: "off", "obj" or None.
    """
    surface: str = config.SETTINGS.defaults.surface
    resolution: Tuple[int, int] = config.SETTINGS.defaults.resolution
    num_modes: int = config.SETTINGS.defaults.modes
    tol_eigen: float = config.SETTINGS.defaults.tolEigen
    tol_parity: float = config.PARITY_TOLERANCE
    nodal_tau: float = config.NODAL_ZERO_THRESHOLD
    out: Optional[Path] = None
    report_format: str = config.SETTINGS.defaults.format
    export_mesh: Optional[str] = None

    def validate(self) -> ParametricSurface:
        """Check every field; returns the parsed catalog surface.

        Raises:
            ConfigError: Any invalid field, including a resolution the
                surface's symmetry cannot accommodate.
        """
        surface = parse_surface_spec(self.surface)
        self.resolution = parse_resolution(self.resolution)
        try:
            check_resolution(surface, self.resolution)
        except MeshError as exc:
            raise ConfigError(str(exc)) from None
        if int(self.num_modes) < 2:
            raise ConfigError(f"need at least 2 modes, got {self.num_modes}")
        _positive("tol-eigen", self.tol_eigen)
        _positive("tol-parity", self.tol_parity)
        _positive("nodal-tau", self.nodal_tau)
        if self.report_format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}, got {self.report_format!r}")
        if self.export_mesh is not None and self.export_mesh not in MESH_FORMATS:
            raise ConfigError(f"mesh export must be one of {', '.join(MESH_FORMATS)}, got {self.export_mesh!r}")
        return surface


@dataclass
class SweepConfig:
    """Parameters of a catenoid family sweep."""
    rho_min: float
    rho_max: float
    steps: int
    resolution: Tuple[int, int] = config.SETTINGS.defaults.resolution
    num_modes: int = config.SWEEP_MODES
    tol_eigen: float = config.SETTINGS.defaults.tolEigen
    jobs: int = 1
    out: Optional[Path] = None
    report_format: str = "csv"

    def validate(self) -> None:
        if not config.SWEEP_RHO_MIN < self.rho_min < self.rho_max < config.SWEEP_RHO_MAX:
            raise ConfigError(
                f"rho range [{self.rho_min}, {self.rho_max}] must lie strictly inside "
                f"({config.SWEEP_RHO_MIN}, {config.SWEEP_RHO_MAX}) with rho_min < rho_max"
            )
        if int(self.steps) < 2:
            raise ConfigError(f"sweep needs at least 2 steps, got {self.steps}")
        if int(self.jobs) < 1:
            raise ConfigError(f"jobs must be at least 1, got {self.jobs}")
        self.resolution = parse_resolution(self.resolution)
        if self.resolution[0] % 2 or self.resolution[1] % 4:
            raise ConfigError(f"catenoid resolution {self.resolution} needs an even radial and a multiple-of-4 angular count")
        if int(self.num_modes) < 2:
            raise ConfigError(f"need at least 2 modes, got {self.num_modes}")
        _positive("tol-eigen", self.tol_eigen)
        if self.report_format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}, got {self.report_format!r}")

    def rho_values(self):
        step = (self.rho_max - self.rho_min) / (self.steps - 1)
        return [self.rho_min + k * step for k in range(self.steps)]
