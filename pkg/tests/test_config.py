"""Unit tests for settings loading."""

import json

import pytest

import config


class TestSettings:
    """Tests for the bundled settings file."""

    def test_defaults(self):
        """The bundled defaults describe a critical catenoid run."""
        defaults = config.SETTINGS.defaults
        assert defaults.surface == "critical-catenoid"
        assert defaults.resolution == (40, 160)
        assert defaults.format == "json"

    def test_flat_constants(self):
        """Flat constants mirror the nested settings."""
        assert config.CLUSTER_TOLERANCE == config.SETTINGS.solver.clusterTolerance
        assert config.FREE_BOUNDARY_TOLERANCE == 0.05
        assert config.SCHEMA_VERSION == 1
        assert config.SIGNIFICANT_DIGITS == 17
        assert config.SWEEP_RHO_MIN < config.SWEEP_RHO_MAX

    def test_load_from_path(self, tmp_path):
        """load_settings reads an alternative file."""
        raw = json.loads(config.DEFAULT_SETTINGS_PATH.read_text())
        raw["defaults"]["resolution"] = [8, 32]
        raw["nodal"]["courantSamples"] = 3
        path = tmp_path / "settings.json"
        path.write_text(json.dumps(raw))
        settings = config.load_settings(path)
        assert settings.defaults.resolution == (8, 32)
        assert settings.nodal.courantSamples == 3

    def test_unknown_key(self, tmp_path):
        """Unknown keys in a section are rejected."""
        raw = json.loads(config.DEFAULT_SETTINGS_PATH.read_text())
        raw["solver"]["shiftInvert"] = True
        path = tmp_path / "settings.json"
        path.write_text(json.dumps(raw))
        with pytest.raises(TypeError):
            config.load_settings(path)


class TestSettingsPath:
    """Tests for the settings file override."""

    def test_default(self, monkeypatch):
        """Without an override the bundled file is used."""
        monkeypatch.delenv("STEKLOV_SETTINGS", raising=False)
        assert config.settings_path() == config.DEFAULT_SETTINGS_PATH
        assert config.settings_path().is_file()

    def test_override(self, monkeypatch, tmp_path):
        """STEKLOV_SETTINGS points at another file."""
        target = tmp_path / "custom.json"
        monkeypatch.setenv("STEKLOV_SETTINGS", str(target))
        assert config.settings_path() == target
