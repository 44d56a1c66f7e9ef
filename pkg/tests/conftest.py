"""
Shared fixtures: the two bundled models, isolated settings and run contexts.
"""

import pytest
from hypothesis import settings as hypothesis_settings

from graphnorm.config import Settings
from graphnorm.experiments import ExperimentContext
from graphnorm.models import DiagonalSequence, MomentumLine

hypothesis_settings.register_profile("graphnorm", max_examples=40, deadline=None, derandomize=True)
hypothesis_settings.load_profile("graphnorm")


@pytest.fixture
def momentum() -> MomentumLine:
    return MomentumLine()


@pytest.fixture
def diag() -> DiagonalSequence:
    """a_n = n"""
    return DiagonalSequence()


@pytest.fixture
def settings(tmp_path) -> Settings:
    return Settings(log_file=str(tmp_path / "graphnorm.log"), report_dir=str(tmp_path / "reports"))


@pytest.fixture
def make_ctx(settings):
    def _make(**options) -> ExperimentContext:
        return ExperimentContext(settings, options)

    return _make


@pytest.fixture
def cli_env(tmp_path, monkeypatch):
    """Point log file and report directory of main() into tmp_path."""
    monkeypatch.setenv("GRAPHNORM_LOG_FILE", str(tmp_path / "graphnorm.log"))
    monkeypatch.setenv("GRAPHNORM_REPORT_DIR", str(tmp_path / "reports"))
    for name in ("GRAPHNORM_EPS", "GRAPHNORM_WORKERS", "GRAPHNORM_RANK_TOL", "GRAPHNORM_MAX_INDEX", "GRAPHNORM_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    return tmp_path
