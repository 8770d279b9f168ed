"""Fundamental domain of a symmetric mesh and its labeled boundary arcs.

The domain is the part of the mesh in the closed orthant where every
generator normal has a nonnegative coordinate. Its boundary splits into
arcs: "gamma" on the unit sphere, "free" on a boundary curve off the
sphere, and "e1"/"e2"/"e3" on the symmetry planes x1/x2/x3 = 0.
"""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, List, Set, Tuple

import numpy as np

import config
from errors import MeshError
from mesh.group_action import GroupAction
from mesh.triangle_mesh import TriangleMesh, trace_boundary_loops

logger = logging.getLogger(__name__)

GAMMA = "gamma"
FREE = "free"


def plane_label(axis: int) -> str:
    """Arc label for the coordinate plane x_{axis+1} = 0."""
    return f"e{axis + 1}"


@dataclass(eq=False)
class FundamentalDomain:
    """Orthant submesh with labeled boundary arcs.

    Attributes:
        submesh: The restricted mesh, with local vertex ids.
        edge_labels: Label -> ordered path of submesh-local vertex ids.
        lift_map: lift_map[local] is the full-mesh vertex id.
        parent: The full mesh.
        normals: Generator normals defining the orthant.
    """
    submesh: TriangleMesh
    edge_labels: Dict[str, List[int]]
    lift_map: np.ndarray
    parent: TriangleMesh
    normals: np.ndarray

    def label_set(self) -> Set[str]:
        """Distinct arc families (suffixes such as "_2" stripped)."""
        return {label.split("_")[0] for label in self.edge_labels}

    def lifted_labels(self) -> Dict[str, List[int]]:
        """edge_labels with full-mesh vertex ids."""
        return {label: self.lift_map[path].tolist() for label, path in self.edge_labels.items()}

    def edge_label_map(self) -> Dict[Tuple[int, int], str]:
        """Full-mesh undirected edge (a < b) -> arc label for every labeled edge."""
        result = {}
        for label, path in self.lifted_labels().items():
            for a, b in zip(path, path[1:]):
                result[(min(a, b), max(a, b))] = label.split("_")[0]
        return result

    def vertex_label_map(self) -> Dict[int, Set[str]]:
        """Full-mesh vertex id -> labels of every arc through it."""
        result: Dict[int, Set[str]] = defaultdict(set)
        for label, path in self.lifted_labels().items():
            for v in path:
                result[v].add(label.split("_")[0])
        return dict(result)

    def contains(self, points: np.ndarray, tolerance: float = 0.0) -> np.ndarray:
        """Boolean mask of points inside the closed orthant (with slack)."""
        return np.all(np.atleast_2d(points) @ self.normals.T >= -tolerance, axis=1)

    def orbit_triangle_multiplicity(self, mesh: TriangleMesh, action: GroupAction) -> np.ndarray:
        """How many group images of the domain cover each triangle of mesh."""
        keys = {tuple(sorted(t)): n for n, t in enumerate(mesh.triangles.tolist())}
        counts = np.zeros(mesh.triangle_count, dtype=int)
        lifted = self.lift_map[self.submesh.triangles]
        for element in action.elements():
            for t in element.permutation[lifted].tolist():
                index = keys.get(tuple(sorted(t)))
                if index is None:
                    raise MeshError(f"image of domain triangle {t} under {element.word} is not a mesh triangle")
                counts[index] += 1
        return counts


def _on_sphere(points: np.ndarray) -> np.ndarray:
    return np.abs(np.linalg.norm(points, axis=1) - 1.0) <= config.SPHERE_TOLERANCE


def _chain_paths(edges: List[Tuple[int, int]]) -> List[List[int]]:
    """Order undirected edges into maximal vertex paths (or closed cycles)."""
    adjacency: Dict[int, List[int]] = defaultdict(list)
    for a, b in edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    for v, nbrs in adjacency.items():
        if len(nbrs) > 2:
            raise MeshError(f"labeled arc branches at vertex {v}")

    used: Set[Tuple[int, int]] = set()
    paths = []
    ends = sorted(v for v, nbrs in adjacency.items() if len(nbrs) == 1)
    starts = ends + sorted(adjacency)
    for start in starts:
        if all((min(start, n), max(start, n)) in used for n in adjacency[start]):
            continue
        path = [start]
        current = start
        while True:
            step = next((n for n in sorted(adjacency[current]) if (min(current, n), max(current, n)) not in used), None)
            if step is None:
                break
            used.add((min(current, step), max(current, step)))
            path.append(step)
            current = step
        paths.append(path)
    return paths


def _label_edge(parent: TriangleMesh, a: int, b: int, boundary_edges: Set[Tuple[int, int]], axes) -> str:
    key = (min(a, b), max(a, b))
    if key in boundary_edges:
        return GAMMA if bool(np.all(_on_sphere(parent.vertices[[a, b]]))) else FREE
    common = (parent.plane_tags[a] & parent.plane_tags[b]) & set(axes)
    if len(common) == 1:
        return plane_label(next(iter(common)))
    if not common:
        raise MeshError(f"domain boundary edge {key} lies on no symmetry plane")
    raise MeshError(f"ambiguous label for domain boundary edge {key}: planes {sorted(common)}")


def fundamental_domain(mesh: TriangleMesh, action: GroupAction) -> FundamentalDomain:
    """Restrict a symmetric mesh to the closed orthant and label its boundary.

    Args:
        mesh: Mesh built by build_symmetric_mesh.
        action: Its group action.

    Returns:
        The FundamentalDomain; for the critical catenoid the labels are
        exactly gamma, e1, e2, e3.

    Raises:
        MeshError: Mesh not invariant, or an edge that cannot be labeled
            uniquely.
    """
    action.check(mesh)
    normals = np.array(action.generators, dtype=float).reshape(-1, 3)
    inside = np.all(mesh.vertices @ normals.T >= 0.0, axis=1)
    keep = np.all(inside[mesh.triangles], axis=1)
    kept = mesh.triangles[keep]
    lift_map = np.unique(kept)
    local = np.full(mesh.vertex_count, -1, dtype=int)
    local[lift_map] = np.arange(len(lift_map))
    sub_triangles = local[kept]

    submesh = TriangleMesh(
        vertices=mesh.vertices[lift_map],
        triangles=sub_triangles,
        boundary_loops=trace_boundary_loops(sub_triangles),
        plane_tags=[mesh.plane_tags[v] for v in lift_map],
        name=f"{mesh.name}/domain",
        resolution=mesh.resolution,
    )

    parent_boundary = {(min(a, b), max(a, b)) for a, b in mesh.boundary_edges()}
    by_label: Dict[str, List[Tuple[int, int]]] = defaultdict(list)
    for a, b in submesh.boundary_edges():
        label = _label_edge(mesh, int(lift_map[a]), int(lift_map[b]), parent_boundary, action.axes)
        by_label[label].append((a, b))

    edge_labels: Dict[str, List[int]] = {}
    for label in sorted(by_label):
        for n, path in enumerate(_chain_paths(by_label[label])):
            edge_labels[label if n == 0 else f"{label}_{n + 1}"] = path

    counts = Counter(label.split("_")[0] for label in edge_labels)
    logger.debug("fundamental domain of %s: %d triangles, arcs %s", mesh.name, len(sub_triangles), dict(counts))
    return FundamentalDomain(submesh=submesh, edge_labels=edge_labels, lift_map=lift_map, parent=mesh, normals=normals)
