"""Command implementations: spectrum, verify, sweep and orbit-count.

Each command takes a validated configuration, writes its report and
returns a process exit code. Library errors propagate to the caller,
which maps them to exit codes.
"""

import logging
import re
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np

import config
from cli.reports import emit, to_csv, to_json
from cli.run_config import RunConfig, SweepConfig
from errors import ConfigError, MeshError
from mesh import build_symmetric_mesh, fundamental_domain, write_edge_labels, write_obj, write_off
from nodal import DomainPattern, OrbitPattern, courant_check, domain_contact_check, nodal_report, orbit_nodal_count
from steklov import (
    SteklovProblem,
    coordinate_residual,
    max_coordinate_residual,
    spectrum_report,
    steklov_spectrum,
)
from surfaces import CatenoidParams, CatenoidSurface
from symmetry import classify, coordinate_orthogonality, parity_table_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 4


def _safe_name(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9.-]+", "_", name).strip("_")


def _export_mesh(run: RunConfig, mesh, action, spectrum) -> None:
    if run.out is not None:
        base = Path(run.out).with_suffix("")
    else:
        base = Path(f"{_safe_name(run.surface)}-{run.resolution[0]}x{run.resolution[1]}")
    scalars = {f"mode{k}": spectrum.extensions[:, k] for k in range(spectrum.num_modes)}
    writer = write_off if run.export_mesh == "off" else write_obj
    writer(mesh, base.with_name(base.name + f".{run.export_mesh}"), scalars)
    domain = fundamental_domain(mesh, action)
    write_edge_labels(domain.lifted_labels(), base.with_name(base.name + ".labels.json"))


def _solve(run: RunConfig):
    surface = run.validate()
    logger.info("meshing %s at %dx%d", surface.name, *run.resolution)
    mesh, action = build_symmetric_mesh(surface, run.resolution)
    problem = SteklovProblem(mesh)
    spectrum = steklov_spectrum(mesh, int(run.num_modes), problem, cluster_tol=run.tol_eigen)
    return surface, mesh, action, problem, spectrum


def _coordinate_residuals(mesh, problem) -> Optional[Dict[str, Optional[float]]]:
    try:
        return coordinate_residual(mesh, problem)
    except MeshError as exc:
        logger.info("coordinate residuals skipped: %s", exc)
        return None


def cmd_spectrum(run: RunConfig) -> int:
    """Compute a spectrum and write the spectrum report."""
    surface, mesh, action, problem, spectrum = _solve(run)
    report = spectrum_report(spectrum, run.surface, run.resolution, run.tol_eigen, _coordinate_residuals(mesh, problem))
    if run.export_mesh:
        _export_mesh(run, mesh, action, spectrum)

    if run.report_format == "csv":
        multiplicity = {}
        for c, cluster in enumerate(spectrum.clusters(run.tol_eigen)):
            for k in cluster.indices:
                multiplicity[k] = (c, cluster.multiplicity)
        rows = [
            (k, float(sigma), multiplicity[k][0], multiplicity[k][1], float(spectrum.residuals["rayleigh"][k]))
            for k, sigma in enumerate(spectrum.eigenvalues)
        ]
        emit(to_csv(["mode", "eigenvalue", "cluster", "multiplicity", "rayleigh_residual"], rows), run.out)
    else:
        emit(to_json(report), run.out)
    return EXIT_OK


def _free_boundary_check(mesh, problem) -> dict:
    try:
        residuals = coordinate_residual(mesh, problem)
    except MeshError as exc:
        return {"passed": False, "reason": str(exc), "residuals": None}
    worst = max_coordinate_residual(residuals)
    return {
        "passed": worst <= config.FREE_BOUNDARY_TOLERANCE,
        "tolerance": config.FREE_BOUNDARY_TOLERANCE,
        "max_residual": worst,
        "residuals": residuals,
    }


def _orthogonality_check(spectrum, mesh, problem, tol_eigen: float, free_boundary: bool) -> dict:
    cross = spectrum.cross_orthogonality(config.EIGENVALUE_GAP)
    coordinates = coordinate_orthogonality(spectrum, mesh, problem, tol_eigen) if free_boundary else []
    passed = cross <= config.ORTHOGONALITY_TOLERANCE and all(row["passed"] for row in coordinates)
    return {"passed": passed, "cross_max": cross, "tolerance": config.ORTHOGONALITY_TOLERANCE, "coordinates": coordinates}


def _nodal_report(spectrum, mesh, action, run: RunConfig) -> Optional[dict]:
    try:
        return nodal_report(spectrum, mesh, action, tol=run.tol_eigen, tau=run.nodal_tau)
    except MeshError as exc:
        logger.info("nodal report skipped: %s", exc)
        return None


def cmd_verify(run: RunConfig) -> int:
    """Run the verification suite; exit 0 iff every check passes."""
    surface, mesh, action, problem, spectrum = _solve(run)
    free_boundary = _free_boundary_check(mesh, problem)
    courant = courant_check(spectrum, mesh, tol=run.tol_eigen, tau=run.nodal_tau)
    parity = classify(spectrum, action, tol=run.tol_parity, cluster_tol=run.tol_eigen)
    orthogonality = _orthogonality_check(spectrum, mesh, problem, run.tol_eigen, free_boundary["passed"])
    rayleigh_worst = float(np.max(spectrum.residuals["rayleigh"]))
    checks = {
        "free_boundary": free_boundary,
        "courant": courant.to_dict(),
        "parity": parity.to_dict(),
        "orthogonality": orthogonality,
        "rayleigh_identity": {
            "passed": rayleigh_worst <= config.RAYLEIGH_TOLERANCE,
            "max_residual": rayleigh_worst,
            "tolerance": config.RAYLEIGH_TOLERANCE,
        },
    }
    passed = all(check["passed"] for check in checks.values())
    for name, check in checks.items():
        logger.info("%s: %s", name, "pass" if check["passed"] else "FAIL")
    if run.export_mesh:
        _export_mesh(run, mesh, action, spectrum)

    if run.report_format == "csv":
        text = to_csv(["check", "passed"], [(name, check["passed"]) for name, check in checks.items()])
        text += "\n" + parity_table_csv(parity.modes)
    else:
        text = to_json({
            "schema": config.SCHEMA_VERSION,
            "surface": run.surface,
            "resolution": list(run.resolution),
            "checks": checks,
            "nodal": _nodal_report(spectrum, mesh, action, run),
            "passed": passed,
        })
    emit(text, run.out)
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


SWEEP_COLUMNS = ("rho", "sigma1", "multiplicity", "boundary_length", "sigma1_times_length", "residual")


def sweep_point(rho: float, resolution, num_modes: int, tol_eigen: float) -> dict:
    """One row of the catenoid sweep."""
    surface = CatenoidSurface(CatenoidParams.normalized(rho))
    mesh, _ = build_symmetric_mesh(surface, resolution)
    problem = SteklovProblem(mesh)
    spectrum = steklov_spectrum(mesh, num_modes, problem, cluster_tol=tol_eigen)
    cluster = spectrum.first_nonzero_cluster(tol_eigen)
    sigma1 = float(spectrum.eigenvalues[cluster.indices[0]])
    length = mesh.boundary_length()
    return {
        "rho": float(rho),
        "sigma1": sigma1,
        "multiplicity": cluster.multiplicity,
        "boundary_length": length,
        "sigma1_times_length": sigma1 * length,
        "residual": max_coordinate_residual(coordinate_residual(mesh, problem)),
    }


def _sweep_task(args) -> dict:
    return sweep_point(*args)


def cmd_sweep(sweep: SweepConfig) -> int:
    """Sweep the normalized catenoid family over a rho grid."""
    sweep.validate()
    tasks = [(rho, sweep.resolution, int(sweep.num_modes), sweep.tol_eigen) for rho in sweep.rho_values()]
    logger.info("sweeping %d catenoids on %d worker(s)", len(tasks), sweep.jobs)
    if sweep.jobs > 1:
        with ProcessPoolExecutor(max_workers=sweep.jobs) as pool:
            rows: List[dict] = list(pool.map(_sweep_task, tasks))
    else:
        rows = [_sweep_task(task) for task in tasks]

    if sweep.report_format == "json":
        emit(to_json({"schema": config.SCHEMA_VERSION, "columns": list(SWEEP_COLUMNS), "rows": rows}), sweep.out)
    else:
        emit(to_csv(SWEEP_COLUMNS, [[row[c] for c in SWEEP_COLUMNS] for row in rows]), sweep.out)
    return EXIT_OK


def cmd_orbit_count(ending_edge: str, dihedral: Optional[int] = None, contact: bool = False,
                    out: Optional[Path] = None) -> int:
    """Print the orbit nodal count for an ending edge (or the contact report)."""
    domain = DomainPattern.coordinate_square() if dihedral is None else DomainPattern.dihedral_square(dihedral)
    if contact:
        emit(to_json({"schema": config.SCHEMA_VERSION, **domain_contact_check(domain).to_dict()}), out)
        return EXIT_OK
    if ending_edge is None:
        raise ConfigError("orbit-count needs an ending edge (gamma, e1, e2 or e3)")
    order = len(domain.group())
    pattern = OrbitPattern(ending_edge=ending_edge, group_order=order, domain=domain)
    emit(f"{orbit_nodal_count(pattern)}\n", out)
    return EXIT_OK
