"""Symmetric triangle meshes.

This module builds meshes of catalog surfaces that are exactly invariant
under the surface's reflection group, the group's vertex action, the
orthant fundamental domain and plain-text exports.
"""

from mesh.triangle_mesh import TriangleMesh, boundary_loops, trace_boundary_loops
from mesh.group_action import GroupAction, GroupElement
from mesh.builder import SymmetricGridBuilder, build_symmetric_mesh, check_resolution
from mesh.fundamental_domain import FREE, GAMMA, FundamentalDomain, fundamental_domain, plane_label
from mesh.export import write_edge_labels, write_obj, write_off, write_scalars

__all__ = [
    'TriangleMesh',
    'boundary_loops',
    'trace_boundary_loops',
    'GroupAction',
    'GroupElement',
    'SymmetricGridBuilder',
    'build_symmetric_mesh',
    'check_resolution',
    'FREE',
    'GAMMA',
    'FundamentalDomain',
    'fundamental_domain',
    'plane_label',
    'write_edge_labels',
    'write_obj',
    'write_off',
    'write_scalars',
]
