"""Triangle mesh container and boundary loop extraction."""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple

import numpy as np

from errors import MeshError
from utils import aspect_ratios, triangle_areas

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class TriangleMesh:
    """Oriented triangle mesh of a surface with boundary.

    Attributes:
        vertices: (n, 3) float coordinates.
        triangles: (m, 3) int vertex indices, consistently oriented.
        boundary_loops: Closed vertex cycles, each starting at its smallest id.
        plane_tags: Per-vertex frozenset of coordinate axes whose plane the
            vertex lies on (that coordinate is exactly 0.0).
        name: Identifier of the originating surface.
        resolution: Grid resolution the mesh was built with.
    """
    vertices: np.ndarray
    triangles: np.ndarray
    boundary_loops: List[np.ndarray]
    plane_tags: List[FrozenSet[int]]
    name: str = "mesh"
    resolution: Tuple[int, int] = (0, 0)
    _edge_cache: Dict[str, object] = field(default_factory=dict, repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def triangle_count(self) -> int:
        return len(self.triangles)

    @property
    def mesh_ref(self) -> str:
        """Identifier combining surface name and resolution."""
        return f"{self.name}@{self.resolution[0]}x{self.resolution[1]}"

    def edges(self) -> np.ndarray:
        """Unique undirected edges as an (e, 2) array with row[0] < row[1], sorted."""
        if "edges" not in self._edge_cache:
            t = self.triangles
            pairs = np.concatenate([t[:, [0, 1]], t[:, [1, 2]], t[:, [2, 0]]])
            pairs.sort(axis=1)
            self._edge_cache["edges"] = np.unique(pairs, axis=0)
        return self._edge_cache["edges"]

    def opposite_vertices(self) -> Dict[Tuple[int, int], List[int]]:
        """Map each undirected edge (a < b) to the vertices opposite it."""
        if "opposite" not in self._edge_cache:
            opposite = defaultdict(list)
            for a, b, c in self.triangles.tolist():
                opposite[(min(a, b), max(a, b))].append(c)
                opposite[(min(b, c), max(b, c))].append(a)
                opposite[(min(c, a), max(c, a))].append(b)
            self._edge_cache["opposite"] = dict(opposite)
        return self._edge_cache["opposite"]

    def boundary_edges(self) -> List[Tuple[int, int]]:
        """Directed boundary edges following the loops."""
        result = []
        for loop in self.boundary_loops:
            ids = loop.tolist()
            result.extend(zip(ids, ids[1:] + ids[:1]))
        return result

    def boundary_vertices(self) -> np.ndarray:
        """Sorted ids of all boundary vertices."""
        if not self.boundary_loops:
            return np.zeros(0, dtype=int)
        return np.sort(np.concatenate(self.boundary_loops))

    def euler_characteristic(self) -> int:
        return self.vertex_count - len(self.edges()) + self.triangle_count

    def triangle_areas(self) -> np.ndarray:
        return triangle_areas(self.vertices, self.triangles)

    def aspect_ratios(self) -> np.ndarray:
        return aspect_ratios(self.vertices, self.triangles)

    def boundary_length(self) -> float:
        """Total polygonal length of all boundary loops."""
        total = 0.0
        for loop in self.boundary_loops:
            pts = self.vertices[loop]
            total += float(np.linalg.norm(np.roll(pts, -1, axis=0) - pts, axis=1).sum())
        return total


def trace_boundary_loops(triangles: np.ndarray) -> List[np.ndarray]:
    """Trace the closed boundary cycles of an oriented triangle list.

    Boundary edges are the directed triangle edges whose undirected edge
    belongs to exactly one triangle. Loops follow the triangle orientation,
    start at their smallest vertex id and are returned sorted by that id.

    Raises:
        MeshError: An edge shared by more than two triangles, or a boundary
            vertex with more than one outgoing boundary edge.
    """
    directed = []
    for a, b, c in np.asarray(triangles).tolist():
        directed.extend(((a, b), (b, c), (c, a)))
    counts = Counter((min(a, b), max(a, b)) for a, b in directed)
    for edge, count in counts.items():
        if count > 2:
            raise MeshError(f"non-manifold edge {edge} shared by {count} triangles")

    successor: Dict[int, int] = {}
    for a, b in directed:
        if counts[(min(a, b), max(a, b))] == 1:
            if a in successor:
                raise MeshError(f"non-manifold boundary vertex {a}")
            successor[a] = b

    loops = []
    visited = set()
    for start in sorted(successor):
        if start in visited:
            continue
        loop = [start]
        visited.add(start)
        current = successor[start]
        while current != start:
            if current in visited or current not in successor:
                raise MeshError(f"boundary starting at vertex {start} does not close")
            loop.append(current)
            visited.add(current)
            current = successor[current]
        loops.append(np.array(loop, dtype=int))
    logger.debug("traced %d boundary loops", len(loops))
    return loops


def boundary_loops(mesh: TriangleMesh) -> List[np.ndarray]:
    """Boundary cycles of a mesh, re-derived from its triangles."""
    return trace_boundary_loops(mesh.triangles)
