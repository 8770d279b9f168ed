"""Nodal sets and nodal domains of vertex functions."""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components

import config
from mesh import TriangleMesh

logger = logging.getLogger(__name__)

# ("e", a, b): zero crossing on edge a < b; ("v", a): vertex a is a zero.
NodalKey = Tuple


@dataclass(eq=False)
class NodalDecomposition:
    """Sign pattern, nodal domains and nodal polylines of one vertex function.

    Attributes:
        signs: Per-vertex +1, -1 or 0.
        domain_labels: Per-vertex component id (-1 for zero vertices).
        domain_count: Number of connected sign components.
        nodal_polylines: Zero-set polylines as (k, 3) point arrays.
        polyline_keys: The mesh features each polyline point lies on.
        closed: Whether each polyline is a closed loop.
        threshold: Relative zero threshold used.
    """
    signs: np.ndarray
    domain_labels: np.ndarray
    domain_count: int
    nodal_polylines: List[np.ndarray]
    polyline_keys: List[List[NodalKey]]
    closed: List[bool] = field(default_factory=list)
    threshold: float = 0.0

    def domain_signs(self) -> Dict[int, int]:
        """Sign of each nodal domain."""
        result = {}
        for v in np.flatnonzero(self.domain_labels >= 0):
            result.setdefault(int(self.domain_labels[v]), int(self.signs[v]))
        return result

    def domains_touching(self, vertex_ids: np.ndarray) -> set:
        """Domain ids containing at least one of the given vertices."""
        labels = self.domain_labels[np.asarray(vertex_ids, dtype=int)]
        return {int(label) for label in labels if label >= 0}

    def to_dict(self, arcs=None) -> dict:
        """Nodal report entry; endpoints are the end labels of the NodalArc pieces in arcs."""
        return {
            "domain_count": self.domain_count,
            "polylines": [line.tolist() for line in self.nodal_polylines],
            "endpoints": [list(arc.endpoints) for arc in arcs or ()],
        }


def vertex_signs(u: np.ndarray, tau: float) -> np.ndarray:
    """+1/-1 by sign, 0 where |u| <= tau * max|u|."""
    scale = float(np.abs(u).max()) if u.size else 0.0
    if scale == 0.0:
        raise ValueError("vertex function is identically zero")
    signs = np.sign(u).astype(int)
    signs[np.abs(u) <= tau * scale] = 0
    if not np.any(signs):
        raise ValueError("every vertex is below the zero threshold")
    return signs


def _key_point(key: NodalKey, mesh: TriangleMesh, u: np.ndarray) -> np.ndarray:
    if key[0] == "v":
        return mesh.vertices[key[1]]
    _, a, b = key
    t = u[a] / (u[a] - u[b])
    return mesh.vertices[a] + t * (mesh.vertices[b] - mesh.vertices[a])


def nodal_segments(mesh: TriangleMesh, u: np.ndarray, signs: np.ndarray) -> List[Tuple[NodalKey, NodalKey]]:
    """Zero-set segments of the piecewise-linear interpolant.

    A triangle carrying both signs holds one segment between its two zero
    features. An edge whose endpoints are both zero holds a segment when
    the triangles on either side have opposite signs at their third vertex.
    """
    segments = set()
    for tri in mesh.triangles.tolist():
        s = [signs[v] for v in tri]
        if 1 not in s or -1 not in s:
            continue
        keys = []
        for k in range(3):
            a, b = tri[k], tri[(k + 1) % 3]
            if s[k] * s[(k + 1) % 3] < 0:
                keys.append(("e", min(a, b), max(a, b)))
            if s[k] == 0:
                keys.append(("v", a))
        if len(keys) == 2:
            segments.add(tuple(sorted(keys)))

    for (a, b), opposite in mesh.opposite_vertices().items():
        if signs[a] == 0 and signs[b] == 0 and len(opposite) == 2:
            if signs[opposite[0]] * signs[opposite[1]] < 0:
                segments.add((("v", a), ("v", b)))
    return sorted(segments)


def chain_segments(segments: List[Tuple[NodalKey, NodalKey]]) -> List[Tuple[List[NodalKey], bool]]:
    """Join segments into polylines, starting from odd-degree endpoints.

    Returns:
        List of (keys, closed) pairs.
    """
    adjacency: Dict[NodalKey, List[NodalKey]] = defaultdict(list)
    for a, b in segments:
        adjacency[a].append(b)
        adjacency[b].append(a)
    for nbrs in adjacency.values():
        nbrs.sort()

    used = set()
    lines = []
    odd = sorted(k for k, nbrs in adjacency.items() if len(nbrs) % 2 == 1)
    for start in odd + sorted(adjacency):
        while True:
            step = next((n for n in adjacency[start] if frozenset((start, n)) not in used), None)
            if step is None:
                break
            path = [start]
            current = start
            while step is not None:
                used.add(frozenset((current, step)))
                path.append(step)
                current = step
                step = next((n for n in adjacency[current] if frozenset((current, n)) not in used), None)
            closed = len(path) > 2 and path[0] == path[-1]
            lines.append((path[:-1] if closed else path, closed))
    return lines


def nodal_domains(mesh: TriangleMesh, u, tau: float = None) -> NodalDecomposition:
    """Nodal domains and nodal polylines of a vertex function.

    Args:
        mesh: The mesh.
        u: Vertex values.
        tau: Relative zero threshold (config default 1e-8).

    Returns:
        NodalDecomposition; zero vertices belong to no domain.

    Raises:
        ValueError: Dimension mismatch, negative tau or all-zero input.
    """
    tau = config.NODAL_ZERO_THRESHOLD if tau is None else float(tau)
    if tau < 0.0:
        raise ValueError(f"zero threshold must be nonnegative, got {tau!r}")
    u = np.asarray(u, dtype=float)
    if u.shape != (mesh.vertex_count,):
        raise ValueError(f"vertex function has shape {u.shape}, expected ({mesh.vertex_count},)")
    signs = vertex_signs(u, tau)

    nonzero = signs != 0
    edges = mesh.edges()
    same = edges[(signs[edges[:, 0]] == signs[edges[:, 1]]) & nonzero[edges[:, 0]]]
    n = mesh.vertex_count
    graph = sparse.coo_matrix((np.ones(len(same)), (same[:, 0], same[:, 1])), shape=(n, n))
    _, components = connected_components(graph, directed=False)
    # Zero vertices are singleton components; drop them and renumber the rest.
    roots, compact = np.unique(components[nonzero], return_inverse=True)
    labels = np.full(n, -1, dtype=int)
    labels[nonzero] = compact
    count = len(roots)

    lines = chain_segments(nodal_segments(mesh, u, signs))
    polylines = [np.array([_key_point(k, mesh, u) for k in keys]) for keys, _ in lines]
    logger.debug("nodal decomposition: %d domains, %d polylines", count, len(lines))
    return NodalDecomposition(
        signs=signs,
        domain_labels=labels,
        domain_count=count,
        nodal_polylines=polylines,
        polyline_keys=[keys for keys, _ in lines],
        closed=[closed for _, closed in lines],
        threshold=tau,
    )
