"""Nodal domains.

This module extracts nodal sets and nodal domains of discrete
eigenfunctions, checks the two-domain property of the first nonzero
cluster and counts nodal domains on reflection orbits combinatorially.
"""

from nodal.domains import NodalDecomposition, chain_segments, nodal_domains, nodal_segments, vertex_signs
from nodal.courant import CourantReport, CourantSample, cluster_samples, courant_check
from nodal.orbit import (
    ContactCase,
    ContactReport,
    DomainPattern,
    OrbitPattern,
    domain_contact_check,
    orbit_nodal_count,
)
from nodal.endpoints import AMBIGUOUS, INTERIOR, NodalArc, nodal_line_endpoints
from nodal.report import nodal_report

__all__ = [
    'NodalDecomposition',
    'chain_segments',
    'nodal_domains',
    'nodal_segments',
    'vertex_signs',
    'CourantReport',
    'CourantSample',
    'cluster_samples',
    'courant_check',
    'ContactCase',
    'ContactReport',
    'DomainPattern',
    'OrbitPattern',
    'domain_contact_check',
    'orbit_nodal_count',
    'AMBIGUOUS',
    'INTERIOR',
    'NodalArc',
    'nodal_line_endpoints',
    'nodal_report',
]
