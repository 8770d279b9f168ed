"""Catalog of named surfaces.

Names are stable strings shared with the command line:
``critical-catenoid``, ``catenoid:0.8`` (or ``catenoid(0.8)``),
``unit-disk`` and ``flat-annulus:0.5`` (or ``flat-annulus(0.5)``).
"""

import re
from typing import Optional, Tuple

from errors import ConfigError
from surfaces.base import ParametricSurface
from surfaces.catenoid import CatenoidParams, CatenoidSurface
from surfaces.planar import AnnulusSurface, DiskSurface

_NAME = re.compile(r"^(?P<family>[a-z][a-z-]*)(?::(?P<colon>[^():]+)|\((?P<paren>[^()]+)\))?$")

CATALOG_NAMES = ("critical-catenoid", "catenoid:<rho>", "unit-disk", "flat-annulus:<inner-radius>")
_FIXED = ("critical-catenoid", "unit-disk")
_PARAMETRIZED = ("catenoid", "flat-annulus")


def _split_name(name: str) -> Tuple[str, Optional[float]]:
    match = _NAME.match(name)
    if not match:
        raise ConfigError(f"unknown surface {name!r}; expected one of {', '.join(CATALOG_NAMES)}")
    family = match.group("family")
    text = match.group("colon") or match.group("paren")
    if text is None:
        return family, None
    try:
        return family, float(text)
    except ValueError:
        raise ConfigError(f"bad parameter {text!r} for surface family {family!r}") from None


def catalog(name: str) -> ParametricSurface:
    """Look up a catalog surface by its exact name.

    Args:
        name: One of the names in CATALOG_NAMES.

    Returns:
        The catalog entry with its symmetry planes.

    Raises:
        ConfigError: Unknown name or invalid parameter.
    """
    if not name:
        raise ConfigError("missing surface name")
    family, value = _split_name(name)
    if value is None and family in _FIXED:
        if family == "critical-catenoid":
            return CatenoidSurface(CatenoidParams.critical(), name="critical-catenoid")
        return DiskSurface()
    if value is not None and family in _PARAMETRIZED:
        if family == "catenoid":
            return CatenoidSurface(CatenoidParams.normalized(value))
        return AnnulusSurface(value)
    raise ConfigError(f"unknown surface {name!r}; expected one of {', '.join(CATALOG_NAMES)}")


def parse_surface_spec(text: str) -> ParametricSurface:
    """Parse a command line surface string (case and whitespace tolerant)."""
    if text is None or not text.strip():
        raise ConfigError("missing surface name")
    return catalog("".join(text.split()).lower())
