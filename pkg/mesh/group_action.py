"""Reflection group acting on a symmetric mesh by vertex permutations."""

import logging
from dataclasses import dataclass
from itertools import product
from typing import List, Tuple

import numpy as np
from scipy import sparse

from errors import MeshError
from mesh.triangle_mesh import TriangleMesh
from utils import reflect_points, reflection_matrix

logger = logging.getLogger(__name__)


def _canonical_rows(triangles: np.ndarray) -> np.ndarray:
    """Rotate every triangle so its smallest vertex comes first (orientation kept)."""
    shift = np.argmin(triangles, axis=1)
    idx = (shift[:, None] + np.arange(3)[None, :]) % 3
    return np.take_along_axis(triangles, idx, axis=1)


@dataclass(frozen=True)
class GroupElement:
    """One element of the group: which generators were composed, and its action.

    Attributes:
        word: 0/1 flag per generator.
        permutation: Vertex permutation with R(x_v) = x_{permutation[v]}.
        matrix: 3x3 orthogonal matrix.
    """
    word: Tuple[int, ...]
    permutation: np.ndarray
    matrix: np.ndarray


@dataclass(eq=False)
class GroupAction:
    """Reflection group given by plane normals and its vertex permutations.

    Convention: reflecting vertex v through generator k lands exactly on
    vertex vertex_permutations[k][v]. Pulling back a vertex function along
    the reflection is therefore u[vertex_permutations[k]].

    Attributes:
        generators: Unit plane normals.
        vertex_permutations: One involutive permutation per generator.
        axes: Coordinate axis of each generator.
    """
    generators: List[np.ndarray]
    vertex_permutations: List[np.ndarray]
    axes: Tuple[int, ...]

    @property
    def orbit_count(self) -> int:
        """Copies of the fundamental domain (2^k for k independent reflections)."""
        return 2 ** len(self.generators)

    def reflect(self, k: int, points: np.ndarray) -> np.ndarray:
        return reflect_points(points, self.generators[k])

    def elements(self) -> List[GroupElement]:
        """All 2^k group elements, identity first, in binary word order."""
        n = len(self.vertex_permutations[0]) if self.vertex_permutations else 0
        result = []
        for word in product((0, 1), repeat=len(self.generators)):
            perm = np.arange(n)
            matrix = np.eye(3)
            for k, flag in enumerate(word):
                if flag:
                    perm = self.vertex_permutations[k][perm]
                    matrix = reflection_matrix(self.generators[k]) @ matrix
            result.append(GroupElement(word=tuple(word), permutation=perm, matrix=matrix))
        return result

    def permutation_matrix(self, k: int) -> sparse.csr_matrix:
        """Sparse P with (P u)[v] = u[perm[v]]."""
        perm = self.vertex_permutations[k]
        n = len(perm)
        return sparse.csr_matrix((np.ones(n), (np.arange(n), perm)), shape=(n, n))

    def boundary_permutation(self, k: int, boundary_indices: np.ndarray) -> np.ndarray:
        """Permutation of generator k restricted to boundary positions.

        Args:
            k: Generator index.
            boundary_indices: Sorted full-mesh ids of the boundary vertices.

        Returns:
            Array p with boundary_indices[p[i]] == perm[boundary_indices[i]].
        """
        perm = self.vertex_permutations[k]
        images = perm[boundary_indices]
        positions = np.searchsorted(boundary_indices, images)
        if np.any(positions >= len(boundary_indices)) or np.any(boundary_indices[np.minimum(positions, len(boundary_indices) - 1)] != images):
            raise MeshError(f"generator {k} does not preserve the boundary")
        return positions

    def check(self, mesh: TriangleMesh) -> None:
        """Verify the action is an exact symmetry of the mesh.

        Raises:
            MeshError: A permutation that is not an involution, a reflection
                that does not reproduce the vertex array bitwise, or a triangle
                that does not map to an oppositely oriented triangle.
        """
        canonical = _canonical_rows(mesh.triangles)
        known = {tuple(row) for row in canonical.tolist()}
        identity = np.arange(mesh.vertex_count)
        for k, perm in enumerate(self.vertex_permutations):
            if len(perm) != mesh.vertex_count:
                raise MeshError(f"generator {k} permutation has wrong length {len(perm)}")
            if not np.array_equal(perm[perm], identity):
                raise MeshError(f"generator {k} permutation is not an involution")
            if not np.array_equal(self.reflect(k, mesh.vertices), mesh.vertices[perm]):
                raise MeshError(f"mesh vertices are not exactly invariant under generator {k}")
            # Reflections reverse orientation.
            mapped = _canonical_rows(perm[mesh.triangles][:, [0, 2, 1]])
            for t, row in enumerate(mapped.tolist()):
                if tuple(row) not in known:
                    raise MeshError(f"triangle {t} has no mirror image under generator {k}")
        logger.debug("group action with %d generators verified on %s", len(self.generators), mesh.name)
