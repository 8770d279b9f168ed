"""Nodal report of the first nonzero cluster."""

import logging

from mesh import GroupAction, TriangleMesh, fundamental_domain
from nodal.domains import nodal_domains
from nodal.endpoints import nodal_line_endpoints

logger = logging.getLogger(__name__)


def nodal_report(spectrum, mesh: TriangleMesh, action: GroupAction, tol: float = None, tau: float = None) -> dict:
    """Domain counts, nodal polylines and arc endpoints for each sigma_1 basis mode.

    Endpoints come from the nodal arcs restricted to the fundamental domain
    of action, labeled by the domain arc they end on.

    Args:
        spectrum: Computed spectrum of mesh.
        mesh: The mesh.
        action: Its group action.
        tol: Cluster tolerance (config default).
        tau: Relative zero threshold (config default).

    Returns:
        {"cluster": {"value", "multiplicity"}, "modes": [...]} where every
        mode entry has mode, eigenvalue, domain_count, polylines and endpoints.

    Raises:
        ConfigError: The spectrum has no mode beyond sigma_0.
        MeshError: The fundamental domain cannot be labeled.
    """
    cluster = spectrum.first_nonzero_cluster(tol)
    domain = fundamental_domain(mesh, action)
    modes = []
    for k in cluster.indices:
        decomposition = nodal_domains(mesh, spectrum.extensions[:, k], tau)
        arcs = nodal_line_endpoints(decomposition, domain)
        modes.append({"mode": int(k), "eigenvalue": float(spectrum.eigenvalues[k]), **decomposition.to_dict(arcs)})
    logger.debug("nodal report: domain counts %s", [m["domain_count"] for m in modes])
    return {"cluster": {"value": cluster.value, "multiplicity": cluster.multiplicity}, "modes": modes}
