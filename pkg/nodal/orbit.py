"""Combinatorial nodal-domain counting on the orbit of a fundamental domain.

A fundamental domain is a polygon whose sides are one boundary arc
("gamma") and arcs on reflection planes. A nodal arc from an interior
point of gamma to some side splits the polygon into two cells. Copies of
the polygon, one per group element, are glued along plane sides; a cell
in copy g touching plane side p is the same nodal domain as that cell in
copy g*R_p, unless the eigenfunction is odd under R_p (then the side is
part of the nodal set). Counting the glued cells gives the number of nodal
domains the symmetric eigenfunction would have on the whole surface.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from errors import ConfigError
from utils import reflection_matrix

logger = logging.getLogger(__name__)

GAMMA = "gamma"
MAX_GROUP_ORDER = 1000
PARITIES = ("even", "odd")


def _matrix_key(matrix: np.ndarray) -> tuple:
    return tuple(np.round(matrix, 9).ravel().tolist())


@dataclass(frozen=True)
class DomainPattern:
    """Polygonal fundamental domain with reflection planes on its sides.

    Attributes:
        sides: Side names in cyclic order, exactly one of them "gamma".
        side_planes: Plane side name -> index into normals.
        normals: Unit normals of the generating reflection planes.
    """
    sides: Tuple[str, ...]
    side_planes: Tuple[Tuple[str, int], ...]
    normals: Tuple[Tuple[float, float, float], ...]

    def __post_init__(self):
        if self.sides.count(GAMMA) != 1:
            raise ConfigError(f"domain pattern needs exactly one {GAMMA!r} side, got {self.sides}")
        planes = dict(self.side_planes)
        for side in self.sides:
            if side != GAMMA and side not in planes:
                raise ConfigError(f"side {side!r} has no reflection plane")
            if side != GAMMA and not 0 <= planes[side] < len(self.normals):
                raise ConfigError(f"side {side!r} refers to missing normal {planes[side]}")

    @classmethod
    def coordinate_square(cls) -> "DomainPattern":
        """Orthant piece of a surface symmetric through the three coordinate planes."""
        return cls(
            sides=(GAMMA, "e1", "e3", "e2"),
            side_planes=(("e1", 0), ("e2", 1), ("e3", 2)),
            normals=((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)),
        )

    @classmethod
    def dihedral_square(cls, n: int) -> "DomainPattern":
        """Wedge piece for the group of order 4n with planes at angle pi/n around the x3 axis."""
        if n < 2:
            raise ConfigError(f"dihedral order needs n >= 2, got {n}")
        angle = math.pi / n
        return cls(
            sides=(GAMMA, "e1", "e3", "e2"),
            side_planes=(("e1", 0), ("e2", 1), ("e3", 2)),
            normals=((-math.sin(angle), math.cos(angle), 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)),
        )

    @property
    def plane_sides(self) -> Tuple[str, ...]:
        return tuple(side for side in self.sides if side != GAMMA)

    def generator(self, side: str) -> int:
        return dict(self.side_planes)[side]

    def group(self) -> List[np.ndarray]:
        """All elements of the group generated by the side reflections, identity first."""
        generators = [reflection_matrix(np.asarray(n, dtype=float)) for n in self.normals]
        elements = [np.eye(3)]
        index = {_matrix_key(elements[0]): 0}
        frontier = [elements[0]]
        while frontier:
            next_frontier = []
            for g in frontier:
                for r in generators:
                    h = g @ r
                    key = _matrix_key(h)
                    if key not in index:
                        index[key] = len(elements)
                        elements.append(h)
                        next_frontier.append(h)
                        if len(elements) > MAX_GROUP_ORDER:
                            raise ConfigError(f"reflection group exceeds {MAX_GROUP_ORDER} elements (not finite?)")
            frontier = next_frontier
        return elements

    def cells(self, ending_edge: str) -> Tuple[FrozenSet[str], FrozenSet[str]]:
        """Sides touched by each of the two cells cut out by an arc from gamma to ending_edge."""
        if ending_edge not in self.sides:
            raise ConfigError(f"unknown ending edge {ending_edge!r}; expected one of {', '.join(self.sides)}")
        if ending_edge == GAMMA:
            return frozenset([GAMMA]), frozenset(self.sides)
        start = self.sides.index(GAMMA)
        size = len(self.sides)
        rotated = [self.sides[(start + k) % size] for k in range(size)]
        stop = rotated.index(ending_edge)
        forward = frozenset(rotated[:stop + 1])
        backward = frozenset([GAMMA] + rotated[stop:])
        return forward, backward


@dataclass(frozen=True)
class OrbitPattern:
    """A nodal arc configuration in the fundamental domain.

    Attributes:
        ending_edge: Side where the arc leaving gamma ends.
        group_order: Expected order of the reflection group.
        parities: Parity of the eigenfunction under each generator.
        domain: The fundamental domain pattern.
    """
    ending_edge: str
    group_order: int = 8
    parities: Tuple[str, ...] = ("even", "even", "even")
    domain: DomainPattern = field(default_factory=DomainPattern.coordinate_square)

    def __post_init__(self):
        if self.ending_edge not in self.domain.sides:
            raise ConfigError(f"unknown ending edge {self.ending_edge!r}; expected one of {', '.join(self.domain.sides)}")
        if len(self.parities) != len(self.domain.normals):
            raise ConfigError(f"need {len(self.domain.normals)} parities, got {len(self.parities)}")
        for parity in self.parities:
            if parity not in PARITIES:
                raise ConfigError(f"parity must be even or odd, got {parity!r}")
        order = len(self.domain.group())
        if order != self.group_order:
            raise ConfigError(f"group order {self.group_order} does not match the generated group of order {order}")


def orbit_nodal_count(pattern: OrbitPattern) -> int:
    """Number of nodal domains of the glued orbit complex.

    Args:
        pattern: Arc ending and symmetry data.

    Returns:
        The component count: 9, 5, 5, 4 for endings gamma, e1, e2, e3 on
        the coordinate square with all parities even.
    """
    domain = pattern.domain
    elements = domain.group()
    index: Dict[tuple, int] = {_matrix_key(g): n for n, g in enumerate(elements)}
    reflections = [reflection_matrix(np.asarray(n, dtype=float)) for n in domain.normals]
    cells = domain.cells(pattern.ending_edge)

    forest = DisjointSet((g, c) for g in range(len(elements)) for c in range(len(cells)))
    for g, element in enumerate(elements):
        for c, sides in enumerate(cells):
            for side in sorted(sides - {GAMMA}):
                k = domain.generator(side)
                if pattern.parities[k] == "odd":
                    continue
                neighbour = index[_matrix_key(element @ reflections[k])]
                forest.merge((g, c), (neighbour, c))
    count = forest.n_subsets
    logger.debug("orbit count for ending %s (group order %d): %d", pattern.ending_edge, len(elements), count)
    return count


@dataclass
class ContactCase:
    """One possible ending side of a nodal arc starting inside gamma."""
    ending_edge: str
    cells: List[List[str]]
    missing_planes: List[List[str]]
    orbit_count: int

    @property
    def excluded(self) -> bool:
        return any(self.missing_planes)

    def to_dict(self) -> dict:
        return {
            "ending_edge": self.ending_edge,
            "cells": self.cells,
            "missing_planes": self.missing_planes,
            "orbit_count": self.orbit_count,
            "excluded": self.excluded,
        }


@dataclass
class ContactReport:
    """Contact requirements for every ending side of one domain pattern."""
    cases: List[ContactCase]
    side_count: int

    @property
    def forces_sigma_one(self) -> bool:
        """Every arc configuration is excluded and the domain has at most five sides."""
        return self.side_count <= 5 and all(case.excluded for case in self.cases)

    def to_dict(self) -> dict:
        return {
            "side_count": self.side_count,
            "cases": [case.to_dict() for case in self.cases],
            "forces_sigma_one": self.forces_sigma_one,
        }


def domain_contact_check(pattern: DomainPattern) -> ContactReport:
    """Check which arc endings leave a cell that misses a reflection plane.

    Two nodal domains of a symmetric first eigenfunction must each meet
    every plane side; an ending whose cells miss a plane is excluded.
    """
    order = len(pattern.group())
    cases = []
    for ending in pattern.sides:
        cells = pattern.cells(ending)
        missing = [sorted(set(pattern.plane_sides) - cell) for cell in cells]
        count = orbit_nodal_count(OrbitPattern(ending_edge=ending, group_order=order,
                                               parities=("even",) * len(pattern.normals), domain=pattern))
        cases.append(ContactCase(
            ending_edge=ending,
            cells=[sorted(cell) for cell in cells],
            missing_planes=missing,
            orbit_count=count,
        ))
    return ContactReport(cases=cases, side_count=len(pattern.sides))
