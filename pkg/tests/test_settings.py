"""
Tests for environment-driven settings.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import MonteCarloSettings, OracleSettings, Settings, ThetaSettings


class TestSettings:
    """Test cases for the settings tree."""

    def test_defaults(self):
        """Tolerances and caps match the documented defaults."""
        theta = ThetaSettings()
        assert theta.residual_tolerance == 1e-10
        assert theta.bracket_tolerance == 1e-12
        assert OracleSettings().max_outcomes == 10 ** 8

    def test_environment_override(self, monkeypatch):
        """GD_* variables override defaults at construction."""
        monkeypatch.setenv("GD_WORKERS", "3")
        monkeypatch.setenv("GD_THETA_RESIDUAL_TOL", "1e-6")
        assert MonteCarloSettings().workers == 3
        assert ThetaSettings().residual_tolerance == 1e-6

    def test_ensure_directories(self, tmp_path):
        """ensure_directories creates the data and output folders."""
        config = Settings(data_dir=tmp_path / "data", tables_dir=tmp_path / "data" / "tables",
                          output_dir=tmp_path / "out")
        config.ensure_directories()
        assert (tmp_path / "out").is_dir()
        assert (tmp_path / "data" / "tables").is_dir()
