"""Structured meshes that are exactly invariant under a surface's reflections.

Vertices are computed once in the fundamental parameter region and copied
to the other cells by flipping coordinate signs, so every reflection maps
the vertex array onto itself bitwise. Vertices on a symmetry plane have
that coordinate snapped to 0.0. Quad diagonals alternate between cells so
the triangulation is itself equivariant.
"""

import logging
import math
from typing import List, Set, Tuple

import numpy as np

import config
from errors import MeshError
from mesh.group_action import GroupAction
from mesh.triangle_mesh import TriangleMesh, trace_boundary_loops
from utils import triangle_areas
from surfaces import ParametricSurface
from surfaces.base import AXIS_NORMALS

logger = logging.getLogger(__name__)


def check_resolution(surface: ParametricSurface, resolution: Tuple[int, int]) -> None:
    """Raise MeshError when the grid cannot respect the surface's reflections.

    The angular count must be a multiple of 4 (one cell per quadrant), and
    surfaces symmetric through x3 = 0 need an even radial count so a grid
    line sits on the waist.
    """
    try:
        nu, nv = (int(n) for n in resolution)
    except (TypeError, ValueError):
        raise MeshError(f"resolution must be a pair of integers, got {resolution!r}") from None
    if nu < 1 or nv < 4:
        raise MeshError(f"resolution {nu}x{nv} is too coarse (need at least 1x4)")
    if nv % 4 != 0:
        raise MeshError(f"angular resolution {nv} must be divisible by 4")
    if 2 in surface.symmetry_axes and nu % 2 != 0:
        raise MeshError(f"radial resolution {nu} must be even for {surface.name}")


class SymmetricGridBuilder:
    """Builds a plane-conforming polar grid on a catalog surface."""

    def __init__(self, surface: ParametricSurface, resolution: Tuple[int, int]):
        """Initialize builder.

        Args:
            surface: Catalog surface with parameter grid (u, angle).
            resolution: (radial, angular) cell counts.
        """
        check_resolution(surface, resolution)
        self.surface = surface
        self.nu, self.nv = (int(n) for n in resolution)
        self.quarter = self.nv // 4
        self.z_symmetric = 2 in surface.symmetry_axes

    def build(self) -> Tuple[TriangleMesh, GroupAction]:
        """Build the mesh and the induced vertex permutations."""
        if self.surface.topology == "disk":
            vertices, tags, triangles, perms = self._build_disk()
        else:
            vertices, tags, triangles, perms = self._build_annulus()

        # Sign flips turn snapped zeros into -0.0; adding 0.0 normalizes them.
        vertices += 0.0
        triangles = np.asarray(triangles, dtype=int)
        self._check_areas(vertices, triangles)

        mesh = TriangleMesh(
            vertices=vertices,
            triangles=triangles,
            boundary_loops=trace_boundary_loops(triangles),
            plane_tags=[frozenset(t) for t in tags],
            name=self.surface.name,
            resolution=(self.nu, self.nv),
        )
        axes = self.surface.symmetry_axes
        action = GroupAction(
            generators=[AXIS_NORMALS[a].copy() for a in axes],
            vertex_permutations=[perms[a] for a in axes],
            axes=tuple(axes),
        )
        action.check(mesh)
        logger.debug("built %s: %d vertices, %d triangles, %d boundary loops",
                     mesh.mesh_ref, mesh.vertex_count, mesh.triangle_count, len(mesh.boundary_loops))
        return mesh, action

    def _angular_cell(self, j: int) -> Tuple[int, float, float]:
        """Fundamental angular index and the (x, y) signs for column j."""
        q = self.quarter
        if j <= q:
            return j, 1.0, 1.0
        if j <= 2 * q:
            return 2 * q - j, -1.0, 1.0
        if j < 3 * q:
            return j - 2 * q, -1.0, -1.0
        return 4 * q - j, 1.0, -1.0

    def _ring(self, u: float, z_sign: float, base_tags: Set[int]) -> Tuple[np.ndarray, List[Set[int]]]:
        """Vertices of one closed angular ring at parameter u >= 0 (before z sign)."""
        q = self.quarter
        points = np.empty((self.nv, 3))
        tags = []
        for j in range(self.nv):
            j0, sx, sy = self._angular_cell(j)
            p = np.array(self.surface.point(u, 0.5 * math.pi * j0 / q), dtype=float)
            vertex_tags = set(base_tags)
            if j0 == q:
                p[0] = 0.0
                vertex_tags.add(0)
            if j0 == 0:
                p[1] = 0.0
                vertex_tags.add(1)
            if 2 in vertex_tags:
                p[2] = 0.0
            points[j] = (sx * p[0], sy * p[1], z_sign * p[2])
            tags.append(vertex_tags)
        return points, tags

    def _angular_sign(self, j: int) -> int:
        return 1 if (j // self.quarter) % 2 == 0 else -1

    def _angular_permutations(self) -> Tuple[np.ndarray, np.ndarray]:
        j = np.arange(self.nv)
        return (self.nv // 2 - j) % self.nv, (-j) % self.nv

    def _quad(self, a: int, b: int, c: int, d: int, sign: int) -> List[Tuple[int, int, int]]:
        if sign > 0:
            return [(a, b, c), (a, c, d)]
        return [(a, b, d), (b, c, d)]

    def _build_annulus(self):
        nu, nv = self.nu, self.nv
        lo, hi = self.surface.u_range
        half = nu // 2
        rings = []
        tags: List[Set[int]] = []
        for i in range(nu + 1):
            if self.z_symmetric:
                u = hi * abs(i - half) / half
                z_sign = float(np.sign(i - half))
                base = {2} if i == half else set()
            else:
                u = lo + (hi - lo) * i / nu
                z_sign = 1.0
                base = set()
            points, ring_tags = self._ring(u, z_sign, base)
            rings.append(points)
            tags.extend(ring_tags)
        vertices = np.vstack(rings)

        triangles = []
        for i in range(nu):
            s_u = 1 if (not self.z_symmetric or i >= half) else -1
            for j in range(nv):
                jn = (j + 1) % nv
                a, b, c, d = i * nv + j, (i + 1) * nv + j, (i + 1) * nv + jn, i * nv + jn
                triangles.extend(self._quad(a, b, c, d, s_u * self._angular_sign(j)))

        perm_x, perm_y = self._angular_permutations()
        i = np.repeat(np.arange(nu + 1), nv)
        j = np.tile(np.arange(nv), nu + 1)
        perms = {
            0: i * nv + perm_x[j],
            1: i * nv + perm_y[j],
            2: (nu - i) * nv + j,
        }
        return vertices, tags, triangles, perms

    def _build_disk(self):
        nu, nv = self.nu, self.nv
        rings = [np.zeros((1, 3))]
        tags: List[Set[int]] = [{0, 1}]
        for k in range(1, nu + 1):
            points, ring_tags = self._ring(k / nu, 1.0, set())
            rings.append(points)
            tags.extend(ring_tags)
        vertices = np.vstack(rings)

        def vid(k: int, j: int) -> int:
            return 1 + (k - 1) * nv + j % nv

        triangles = [(0, vid(1, j), vid(1, j + 1)) for j in range(nv)]
        for k in range(1, nu):
            for j in range(nv):
                a, b, c, d = vid(k, j), vid(k + 1, j), vid(k + 1, j + 1), vid(k, j + 1)
                triangles.extend(self._quad(a, b, c, d, self._angular_sign(j)))

        perm_x, perm_y = self._angular_permutations()
        k = np.repeat(np.arange(nu), nv)
        j = np.tile(np.arange(nv), nu)
        perms = {
            0: np.concatenate([[0], 1 + k * nv + perm_x[j]]),
            1: np.concatenate([[0], 1 + k * nv + perm_y[j]]),
        }
        return vertices, tags, triangles, perms

    def _check_areas(self, vertices: np.ndarray, triangles: np.ndarray) -> None:
        areas = triangle_areas(vertices, triangles)
        threshold = config.DEGENERATE_AREA_RATIO * float(areas.mean())
        bad = np.flatnonzero(areas < threshold)
        if bad.size:
            t = int(bad[0])
            raise MeshError(f"degenerate triangle {t} {triangles[t].tolist()} with area {areas[t]:.3e}")


def build_symmetric_mesh(surface: ParametricSurface, resolution: Tuple[int, int]) -> Tuple[TriangleMesh, GroupAction]:
    """Mesh a catalog surface so its reflection group acts exactly.

    Args:
        surface: Catalog surface.
        resolution: (radial, angular) counts; angular divisible by 4, radial
            even when the surface is symmetric through x3 = 0.

    Returns:
        (mesh, action) with the action verified on the mesh.

    Raises:
        MeshError: Incompatible resolution or degenerate triangles.
    """
    return SymmetricGridBuilder(surface, resolution).build()
