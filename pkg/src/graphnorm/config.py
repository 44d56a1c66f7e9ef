"""
Runtime settings for graphnorm.
Values come from the environment (optionally populated from a .env file by main.py);
CLI flags override them per run.
"""

import logging
import os
from collections.abc import Mapping
from dataclasses import dataclass, fields, replace

from .storage.models import ConfigurationError

logger = logging.getLogger(__name__)

ENV_PREFIX = "GRAPHNORM_"


@dataclass(frozen=True)
class Settings:
    """Tolerances, limits and output locations shared by every command"""

    rank_tol: float = 1e-10
    eps: float = 1e-10
    max_index: int = 4_000_000
    workers: int = 1
    log_file: str = "graphnorm_debug.log"
    log_level: str = "DEBUG"
    report_dir: str = "reports"

    def __post_init__(self):
        if not 0 < self.rank_tol < 1:
            raise ConfigurationError(f"rank_tol must lie in (0, 1), got {self.rank_tol}")
        if self.eps <= 0:
            raise ConfigurationError(f"eps must be positive, got {self.eps}")
        if self.max_index < 16:
            raise ConfigurationError(f"max_index must be at least 16, got {self.max_index}")
        if self.workers < 1:
            raise ConfigurationError(f"workers must be at least 1, got {self.workers}")
        if logging.getLevelName(self.log_level.upper()) not in (
            logging.DEBUG,
            logging.INFO,
            logging.WARNING,
            logging.ERROR,
            logging.CRITICAL,
        ):
            raise ConfigurationError(f"Unknown log level: {self.log_level}")

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> "Settings":
        """
        Build settings from GRAPHNORM_* environment variables.

        Args:
            environ: Mapping to read from (defaults to os.environ)

        Returns:
            Settings with every unset variable at its default

        Raises:
            ConfigurationError: If a variable cannot be parsed
        """
        environ = os.environ if environ is None else environ
        values = {}
        for f in fields(cls):
            key = ENV_PREFIX + f.name.upper()
            raw = environ.get(key)
            if raw is None or raw.strip() == "":
                continue
            values[f.name] = _parse_setting(key, raw.strip(), f.type)
        settings = cls(**values)
        logger.debug(f"Loaded settings: {settings}")
        return settings

    def with_overrides(self, **overrides) -> "Settings":
        """Return a copy with every non-None override applied."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **changes) if changes else self


def _parse_setting(key: str, raw: str, kind) -> object:
    # dataclass field types are strings under postponed evaluation
    kind_name = kind if isinstance(kind, str) else kind.__name__
    try:
        if kind_name == "float":
            return float(raw)
        if kind_name == "int":
            return int(float(raw)) if "e" in raw.lower() else int(raw)
        return raw
    except ValueError as e:
        raise ConfigurationError(f"{key}={raw!r} is not a valid {kind_name}") from e
