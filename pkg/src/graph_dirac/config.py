"""Settings for graph-dirac, loaded from an optional YAML file."""

import logging
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError as PydanticValidationError

from schemas.settings import SettingsDocument

from .exceptions import SettingsError

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS_FILE = Path("graph-dirac.yaml")


class Settings:
    """Run-wide defaults backed by a validated dict.

    Config keys (all optional, see SettingsDocument for bounds):
        hbar: Reduced Planck constant (default: 1.0)
        tol: Relative kernel/steady-state tolerance (default: 1e-9)
        max_sweeps: Jacobi sweep limit (default: 100)
        jacobi_tol: Jacobi stopping threshold (default: 1e-13)
        seed: Seed for sampled checks (default: 0)
        samples: Samples per side of the root check (default: 20)
        float_digits: Significant digits for printed floats (default: 17)
    """

    def __init__(self, config: dict[str, Any] | None = None):
        try:
            document = SettingsDocument.model_validate(config or {})
        except PydanticValidationError as e:
            raise SettingsError(
                "Invalid settings",
                errors=[str(err) for err in e.errors()],
            ) from e
        self._config = document.model_dump()

    @classmethod
    def load(cls, path: Path | None = None) -> "Settings":
        """Read settings from ``path``, or from ./graph-dirac.yaml when present.

        Raises:
            SettingsError: If the file is unreadable, not a mapping, or invalid
        """
        if path is None:
            if not DEFAULT_SETTINGS_FILE.exists():
                return cls()
            path = DEFAULT_SETTINGS_FILE

        try:
            raw = yaml.safe_load(path.read_text(encoding="utf-8"))
        except (OSError, yaml.YAMLError) as e:
            raise SettingsError(f"Cannot read settings file {path}: {e}") from e

        if raw is None:
            raw = {}
        if not isinstance(raw, dict):
            raise SettingsError(f"Settings file {path} must contain a mapping")

        logger.debug(f"Loaded settings from {path}")
        return cls(raw)

    def override(self, **values: Any) -> "Settings":
        """Return new settings with the non-None values replaced."""
        merged = dict(self._config)
        merged.update({key: value for key, value in values.items() if value is not None})
        return Settings(merged)

    @property
    def hbar(self) -> float:
        return float(self._config["hbar"])

    @property
    def tol(self) -> float:
        return float(self._config["tol"])

    @property
    def max_sweeps(self) -> int:
        return int(self._config["max_sweeps"])

    @property
    def jacobi_tol(self) -> float:
        return float(self._config["jacobi_tol"])

    @property
    def seed(self) -> int:
        return int(self._config["seed"])

    @property
    def samples(self) -> int:
        return int(self._config["samples"])

    @property
    def float_digits(self) -> int:
        return int(self._config["float_digits"])
