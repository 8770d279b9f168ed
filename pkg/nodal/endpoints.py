"""Where nodal lines meet the boundary arcs of the fundamental domain."""

import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

import numpy as np

from mesh import FundamentalDomain, plane_label
from nodal.domains import NodalDecomposition, NodalKey

logger = logging.getLogger(__name__)

INTERIOR = "interior"
AMBIGUOUS = "ambiguous"

# Slack for deciding that an interpolated point lies in the closed orthant.
ORTHANT_SLACK = 1e-12


@dataclass
class NodalArc:
    """Piece of a nodal polyline inside the fundamental domain.

    Attributes:
        keys: Mesh features along the piece.
        points: (k, 3) coordinates.
        endpoints: Arc label at each end ("interior" for closed curves).
        plane_coincident: Plane arc label when the whole piece lies on a
            symmetry plane, otherwise None.
    """
    keys: List[NodalKey]
    points: np.ndarray
    endpoints: Tuple[str, str]
    plane_coincident: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "endpoints": list(self.endpoints),
            "plane_coincident": self.plane_coincident,
            "points": self.points.tolist(),
        }


def _key_planes(key: NodalKey, domain: FundamentalDomain, axes) -> FrozenSet[int]:
    tags = domain.parent.plane_tags
    if key[0] == "v":
        common = tags[key[1]]
    else:
        common = tags[key[1]] & tags[key[2]]
    return frozenset(common) & frozenset(axes)


def _key_labels(key: NodalKey, domain: FundamentalDomain, edge_map, vertex_map) -> set:
    if key[0] == "v":
        return set(vertex_map.get(key[1], ()))
    label = edge_map.get((key[1], key[2]))
    return {label} if label else set()


def _classify(key: NodalKey, domain: FundamentalDomain, edge_map, vertex_map) -> str:
    labels = _key_labels(key, domain, edge_map, vertex_map)
    if not labels:
        return INTERIOR
    if len(labels) > 1:
        return AMBIGUOUS
    return labels.pop()


def _inside_runs(keys: List[NodalKey], inside: List[bool], closed: bool) -> List[Tuple[List[int], bool]]:
    """Maximal index runs of consecutive inside keys, with a flag for whole closed loops."""
    n = len(keys)
    if closed and all(inside):
        return [(list(range(n)), True)]
    order = list(range(n))
    if closed:
        first_out = inside.index(False)
        order = order[first_out:] + order[:first_out]
    runs, current = [], []
    for i in order:
        if inside[i]:
            current.append(i)
        elif current:
            runs.append((current, False))
            current = []
    if current:
        runs.append((current, False))
    return runs


def nodal_line_endpoints(decomposition: NodalDecomposition, domain: FundamentalDomain) -> List[NodalArc]:
    """Restrict nodal polylines to the fundamental domain and label their ends.

    Each end is labeled with the arc it lies on ("gamma", "e1", ...),
    "interior" when the piece is a closed curve inside the domain, or
    "ambiguous" when the point lies on two arcs at once. A piece lying
    entirely on one symmetry plane is reported as plane-coincident.

    Args:
        decomposition: Nodal decomposition on the full mesh.
        domain: Fundamental domain of the same mesh.

    Returns:
        One NodalArc per piece with at least two points.
    """
    axes = [int(np.argmax(np.abs(n))) for n in domain.normals]
    edge_map = domain.edge_label_map()
    vertex_map = domain.vertex_label_map()
    arcs = []
    for keys, points, closed in zip(decomposition.polyline_keys, decomposition.nodal_polylines, decomposition.closed):
        inside = domain.contains(points, ORTHANT_SLACK).tolist()
        for run, whole_loop in _inside_runs(keys, inside, closed):
            if len(run) < 2:
                continue
            run_keys = [keys[i] for i in run]
            common = frozenset(axes)
            for key in run_keys:
                common &= _key_planes(key, domain, axes)
            if len(common) == 1:
                label = plane_label(next(iter(common)))
                arcs.append(NodalArc(run_keys, points[run], (label, label), plane_coincident=label))
                continue
            if whole_loop:
                ends = (INTERIOR, INTERIOR)
            else:
                ends = (_classify(run_keys[0], domain, edge_map, vertex_map),
                        _classify(run_keys[-1], domain, edge_map, vertex_map))
            arcs.append(NodalArc(run_keys, points[run], ends))
    logger.debug("%d nodal arcs inside the fundamental domain", len(arcs))
    return arcs
