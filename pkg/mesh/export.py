"""Plain-text mesh export: OFF, OBJ, per-vertex scalar CSV and arc label JSON.

Coordinates and scalars are written with 17 significant digits so they
round-trip exactly.
"""

import csv
import json
import logging
from pathlib import Path
from typing import Dict, Mapping, Optional, Sequence

import numpy as np

import config
from mesh.triangle_mesh import TriangleMesh

logger = logging.getLogger(__name__)


def _number(value: float) -> str:
    return f"{float(value):.{config.SIGNIFICANT_DIGITS}g}"


def _scalars_path(path: Path) -> Path:
    return path.with_suffix(".scalars.csv")


def write_off(mesh: TriangleMesh, path, scalars: Optional[Mapping[str, Sequence[float]]] = None) -> Path:
    """Write the mesh in OFF format.

    Args:
        mesh: Mesh to export.
        path: Destination file.
        scalars: Optional named per-vertex attributes, written to a
            ``.scalars.csv`` sidecar next to the mesh.

    Returns:
        The path written.
    """
    path = Path(path)
    lines = ["OFF", f"{mesh.vertex_count} {mesh.triangle_count} 0"]
    lines.extend(" ".join(_number(c) for c in p) for p in mesh.vertices)
    lines.extend(f"3 {a} {b} {c}" for a, b, c in mesh.triangles.tolist())
    path.write_text("\n".join(lines) + "\n")
    if scalars:
        write_scalars(mesh, _scalars_path(path), scalars)
    logger.info("wrote %s", path)
    return path


def write_obj(mesh: TriangleMesh, path, scalars: Optional[Mapping[str, Sequence[float]]] = None) -> Path:
    """Write the mesh in Wavefront OBJ format (1-based faces)."""
    path = Path(path)
    lines = [f"# {mesh.mesh_ref}"]
    lines.extend("v " + " ".join(_number(c) for c in p) for p in mesh.vertices)
    lines.extend(f"f {a + 1} {b + 1} {c + 1}" for a, b, c in mesh.triangles.tolist())
    path.write_text("\n".join(lines) + "\n")
    if scalars:
        write_scalars(mesh, _scalars_path(path), scalars)
    logger.info("wrote %s", path)
    return path


def write_scalars(mesh: TriangleMesh, path, scalars: Mapping[str, Sequence[float]]) -> Path:
    """Write named per-vertex attributes as CSV with a leading vertex column."""
    path = Path(path)
    names = list(scalars)
    columns = [np.asarray(scalars[name], dtype=float) for name in names]
    for name, column in zip(names, columns):
        if column.shape != (mesh.vertex_count,):
            raise ValueError(f"scalar {name!r} has shape {column.shape}, expected ({mesh.vertex_count},)")
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["vertex"] + names)
        for v in range(mesh.vertex_count):
            writer.writerow([v] + [_number(column[v]) for column in columns])
    return path


def write_edge_labels(labels: Dict[str, Sequence[int]], path) -> Path:
    """Write the fundamental-domain arc labels as JSON (label -> vertex ids)."""
    path = Path(path)
    payload = {label: [int(v) for v in ids] for label, ids in sorted(labels.items())}
    path.write_text(json.dumps(payload, indent=2) + "\n")
    return path
