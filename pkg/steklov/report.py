"""JSON-ready summaries of computed spectra."""

from typing import Dict, Optional

import numpy as np

import config
from steklov.spectrum import Spectrum


def spectrum_report(spectrum: Spectrum, surface: str, resolution, tol: float,
                    coordinate_residuals: Optional[Dict[str, Optional[float]]] = None) -> dict:
    """Build the spectrum report dictionary (schema 1).

    Args:
        spectrum: Computed spectrum.
        surface: Catalog name.
        resolution: (radial, angular) pair.
        tol: Cluster tolerance.
        coordinate_residuals: Output of coordinate_residual, or None when
            the verifier does not apply.
    """
    residuals = {
        "coordinates": coordinate_residuals,
        "rayleigh_identity": [float(r) for r in spectrum.residuals.get("rayleigh", [])],
        "dtn": [float(r) for r in spectrum.residuals.get("dtn", [])],
        "harmonic": [float(r) for r in spectrum.residuals.get("harmonic", [])],
        "orthonormality": spectrum.orthonormality_defect(),
    }
    return {
        "schema": config.SCHEMA_VERSION,
        "surface": surface,
        "resolution": [int(n) for n in resolution],
        "mesh": spectrum.mesh_ref,
        "requested_modes": int(spectrum.requested_modes),
        "eigenvalues": [float(v) for v in np.asarray(spectrum.eigenvalues)],
        "clusters": [{"value": c.value, "multiplicity": c.multiplicity} for c in spectrum.clusters(tol)],
        "residuals": residuals,
    }
