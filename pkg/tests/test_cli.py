"""Unit tests for the command line front end."""

import csv
import io
import json
import math

import pytest

from cli import EXIT_OK, EXIT_VERIFY_FAILED, SWEEP_COLUMNS, RunConfig, SweepConfig, main, parse_resolution
from errors import ConfigError
from surfaces import solve_rho0


def run(capsys, *argv):
    """Run the CLI and return (exit code, stdout, stderr)."""
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestOrbitCountCommand:
    """Tests for the orbit-count command."""

    @pytest.mark.parametrize("edge, expected", [("gamma", "9"), ("e1", "5"), ("e2", "5"), ("e3", "4")])
    def test_counts(self, capsys, edge, expected):
        """The count is printed on its own line."""
        code, out, _ = run(capsys, "orbit-count", edge)
        assert code == EXIT_OK
        assert out == expected + "\n"

    def test_dihedral(self, capsys):
        """--dihedral 3 gives 4n + 1 for a gamma ending."""
        code, out, _ = run(capsys, "orbit-count", "gamma", "--dihedral", "3")
        assert code == EXIT_OK
        assert out.strip() == "13"

    def test_contact(self, capsys):
        """--contact prints the contact report."""
        code, out, _ = run(capsys, "orbit-count", "--contact")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["forces_sigma_one"] is True
        assert len(payload["cases"]) == 4

    def test_missing_edge(self, capsys):
        """Without an edge or --contact the command fails with exit 1."""
        code, _, err = run(capsys, "orbit-count")
        assert code == 1
        assert err.startswith("error:")

    def test_bad_edge(self, capsys):
        """An unknown ending edge exits 1."""
        assert run(capsys, "orbit-count", "e7")[0] == 1


class TestArgumentErrors:
    """Tests for exit codes on bad input."""

    @pytest.mark.parametrize("argv", [
        ["spectrum", "--surface", "torus"],
        ["spectrum", "--surface", ""],
        ["spectrum", "--res", "40x161"],
        ["spectrum", "--res", "forty"],
        ["spectrum", "--modes", "1"],
        ["spectrum", "--format", "xml"],
        ["spectrum", "--tol-eigen", "-1"],
        ["sweep", "--rho-min", "0.1", "--rho-max", "1.4", "--steps", "3"],
        ["sweep", "--rho-min", "1.0"],
        ["frobnicate"],
        [],
    ])
    def test_configuration_errors(self, capsys, argv):
        """Invalid flags, names and resolutions exit 1 with a message on stderr."""
        code, out, err = run(capsys, *argv)
        assert code == 1
        assert out == ""
        assert "error:" in err


class TestSpectrumCommand:
    """Tests for the spectrum command."""

    def test_json(self, capsys):
        """The JSON report follows schema 1."""
        code, out, _ = run(capsys, "spectrum", "--surface", "unit-disk", "--res", "8x32", "--modes", "5", "--tol-eigen", "0.02")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["schema"] == 1
        assert payload["requested_modes"] == 5
        assert payload["surface"] == "unit-disk"
        assert payload["resolution"] == [8, 32]
        assert len(payload["eigenvalues"]) == 5
        assert [c["multiplicity"] for c in payload["clusters"]] == [1, 2, 2]
        assert payload["residuals"]["coordinates"]["x3"] is None
        assert set(payload["residuals"]) == {"coordinates", "rayleigh_identity", "dtn", "harmonic", "orthonormality"}

    def test_csv(self, capsys):
        """The CSV report has one row per mode."""
        code, out, _ = run(capsys, "spectrum", "--surface", "unit-disk", "--res", "8x32", "--modes", "5", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == EXIT_OK
        assert rows[0] == ["mode", "eigenvalue", "cluster", "multiplicity", "rayleigh_residual"]
        assert len(rows) == 6

    def test_deterministic(self, capsys):
        """Two runs print identical reports."""
        argv = ("spectrum", "--surface", "critical-catenoid", "--res", "8x32", "--modes", "6")
        first = run(capsys, *argv)[1]
        second = run(capsys, *argv)[1]
        assert first == second

    def test_annulus_has_no_coordinate_residuals(self, capsys):
        """Surfaces off the sphere report null coordinate residuals."""
        code, out, _ = run(capsys, "spectrum", "--surface", "flat-annulus:0.5", "--res", "4x32", "--modes", "4")
        assert code == EXIT_OK
        assert json.loads(out)["residuals"]["coordinates"] is None

    def test_cut_cluster_completed(self, capsys):
        """Two disk modes come back as sigma_0 and the whole sigma_1 pair."""
        code, out, _ = run(capsys, "spectrum", "--surface", "unit-disk", "--res", "32x128", "--modes", "2")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["requested_modes"] == 2
        assert len(payload["eigenvalues"]) == 3
        assert [c["multiplicity"] for c in payload["clusters"]] == [1, 2]

    def test_default_tolerance_separates_close_pairs(self, capsys):
        """The catenoid doubles near 3.605 and 3.616 are reported as two clusters."""
        code, out, _ = run(capsys, "spectrum", "--surface", "critical-catenoid", "--res", "40x160", "--modes", "16")
        clusters = json.loads(out)["clusters"]
        assert code == EXIT_OK
        assert clusters[1]["multiplicity"] == 3
        assert [c["multiplicity"] for c in clusters if 3.55 < c["value"] < 3.7] == [2, 2]

    def test_export_mesh(self, capsys, tmp_path):
        """--export-mesh writes the mesh, its modes and the domain labels next to the report."""
        out = tmp_path / "disk.json"
        code, stdout, _ = run(capsys, "spectrum", "--surface", "unit-disk", "--res", "4x16", "--modes", "3",
                              "--out", str(out), "--export-mesh", "off")
        assert code == EXIT_OK
        assert stdout == ""
        assert json.loads(out.read_text())["schema"] == 1
        assert (tmp_path / "disk.off").read_text().startswith("OFF\n")
        header = (tmp_path / "disk.scalars.csv").read_text().splitlines()[0]
        assert header == "vertex,mode0,mode1,mode2"
        labels = json.loads((tmp_path / "disk.labels.json").read_text())
        assert {name.split("_")[0] for name in labels} == {"gamma", "e1", "e2"}


class TestVerifyCommand:
    """Tests for the verify command."""

    def test_critical_catenoid_passes(self, capsys):
        """Every check passes on the critical catenoid."""
        code, out, _ = run(capsys, "verify", "--surface", "critical-catenoid", "--res", "40x160")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["passed"] is True
        assert set(payload["checks"]) == {"free_boundary", "courant", "parity", "orthogonality", "rayleigh_identity"}
        orthogonality = payload["checks"]["orthogonality"]
        assert orthogonality["coordinates"]
        for row in orthogonality["coordinates"]:
            assert row["value"] <= orthogonality["tolerance"]

    def test_nodal_report(self, capsys):
        """verify reports domain counts, polylines and arc endpoints for the sigma_1 modes."""
        out = run(capsys, "verify", "--surface", "critical-catenoid", "--res", "20x80")[1]
        nodal = json.loads(out)["nodal"]
        assert nodal["cluster"]["multiplicity"] == 3
        for mode in nodal["modes"]:
            assert set(mode) == {"mode", "eigenvalue", "domain_count", "polylines", "endpoints"}
            assert mode["domain_count"] == 2
            assert all(len(pair) == 2 for pair in mode["endpoints"])

    def test_noncritical_fails_free_boundary(self, capsys):
        """catenoid:0.8 fails only the free boundary check."""
        code, out, _ = run(capsys, "verify", "--surface", "catenoid:0.8", "--res", "20x80")
        checks = json.loads(out)["checks"]
        assert code == EXIT_VERIFY_FAILED
        assert checks["free_boundary"]["passed"] is False
        assert checks["courant"]["passed"] is True
        assert checks["rayleigh_identity"]["passed"] is True

    def test_disk_passes(self, capsys):
        """The unit disk passes with the default mode count, which cuts the sigma = 4 pair."""
        code, out, _ = run(capsys, "verify", "--surface", "unit-disk", "--res", "32x128")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["checks"]["free_boundary"]["residuals"]["x3"] is None
        assert payload["checks"]["parity"]["split_failures"] == []
        assert payload["nodal"]["cluster"]["multiplicity"] == 2

    def test_annulus_fails(self, capsys):
        """The annulus is not a free boundary surface."""
        code, out, _ = run(capsys, "verify", "--surface", "flat-annulus:0.5", "--res", "8x32")
        assert code == EXIT_VERIFY_FAILED
        assert json.loads(out)["checks"]["free_boundary"]["passed"] is False

    def test_csv(self, capsys):
        """The CSV verify report lists the checks, then the parity table."""
        code, out, _ = run(capsys, "verify", "--surface", "unit-disk", "--res", "8x32", "--format", "csv")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "check,passed"
        assert "mode,eigenvalue,generator1,generator2" in lines


class TestSweepCommand:
    """Tests for the catenoid sweep."""

    def test_rows(self, capsys):
        """Two steps give a header and two rows."""
        code, out, _ = run(capsys, "sweep", "--rho-min", "1.0", "--rho-max", "1.4", "--steps", "2", "--res", "8x32")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == EXIT_OK
        assert rows[0] == list(SWEEP_COLUMNS)
        assert len(rows) == 3

    def test_minimum_at_critical(self, capsys):
        """The residual is smallest at the grid point nearest rho0, where sigma_1 |boundary| is 4 pi / rho0."""
        code, out, _ = run(capsys, "sweep", "--rho-min", "1.0", "--rho-max", "1.4", "--steps", "9", "--res", "40x160")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == EXIT_OK
        best = min(rows, key=lambda row: float(row["residual"]))
        assert abs(float(best["rho"]) - 1.2) < 1e-9
        expected = 4.0 * math.pi / solve_rho0()
        assert abs(float(best["sigma1_times_length"]) / expected - 1.0) < 0.02

    def test_parallel_matches_serial(self, capsys):
        """Worker processes give the same rows as a serial run."""
        argv = ("sweep", "--rho-min", "1.0", "--rho-max", "1.4", "--steps", "3", "--res", "8x32", "--format", "json")
        serial = json.loads(run(capsys, *argv)[1])
        parallel = json.loads(run(capsys, *argv, "--jobs", "2")[1])
        assert len(parallel["rows"]) == 3
        for a, b in zip(serial["rows"], parallel["rows"]):
            assert a["multiplicity"] == b["multiplicity"]
            assert a == pytest.approx(b, rel=1e-10)
        assert serial["columns"] == list(SWEEP_COLUMNS)


class TestRunConfig:
    """Tests for run parameter validation."""

    def test_parse_resolution(self):
        """Both "NxM" strings and pairs are accepted."""
        assert parse_resolution("40x160") == (40, 160)
        assert parse_resolution(" 8 X 32 ") == (8, 32)
        assert parse_resolution([4, 16]) == (4, 16)

    @pytest.mark.parametrize("text", ["40", "0x16", "ax16", (1, 2, 3)])
    def test_bad_resolution(self, text):
        """Malformed resolutions are configuration errors."""
        with pytest.raises(ConfigError):
            parse_resolution(text)

    def test_validate_returns_surface(self):
        """A valid run config yields its catalog surface."""
        surface = RunConfig(surface="unit-disk", resolution=(8, 32)).validate()
        assert surface.name == "unit-disk"

    def test_export_format(self):
        """Unknown mesh export formats are rejected."""
        with pytest.raises(ConfigError):
            RunConfig(surface="unit-disk", resolution=(8, 32), export_mesh="stl").validate()

    def test_sweep_grid(self):
        """The sweep grid includes both ends."""
        sweep = SweepConfig(rho_min=0.8, rho_max=1.6, steps=17, resolution=(8, 32))
        sweep.validate()
        values = sweep.rho_values()
        assert len(values) == 17
        assert values[0] == 0.8 and abs(values[-1] - 1.6) < 1e-12
        assert abs(values[8] - 1.2) < 1e-12

    def test_sweep_needs_catenoid_resolution(self):
        """Sweeps need an even radial count."""
        with pytest.raises(ConfigError):
            SweepConfig(rho_min=0.8, rho_max=1.6, steps=3, resolution=(9, 32)).validate()
