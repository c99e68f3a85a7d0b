"""
Configuration loading for surreal.

Settings are read from ``.surreal/config.yml`` when it exists; missing files
fall back to defaults. ``SURREAL_NODE_BUDGET`` overrides the arena budget.
"""

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

import yaml

from surreal.core.constants import (
    DEFAULT_CONFIG_PATH,
    DEFAULT_COUNTEREXAMPLE_LIMIT,
    DEFAULT_NODE_BUDGET,
    DEFAULT_RECURSION_LIMIT,
    DEFAULT_TUPLE_LIMIT,
    NODE_BUDGET_ENV,
)
from surreal.core.errors import ConfigurationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurrealConfig:
    """Resolved configuration values."""
    node_budget: int = DEFAULT_NODE_BUDGET
    recursion_limit: int = DEFAULT_RECURSION_LIMIT
    counterexample_limit: int = DEFAULT_COUNTEREXAMPLE_LIMIT
    tuple_limit: int = DEFAULT_TUPLE_LIMIT

    @classmethod
    def from_mapping(
        cls,
        data: Optional[Mapping[str, Any]],
        environ: Optional[Mapping[str, str]] = None,
    ) -> "SurrealConfig":
        """
        Build a config from a parsed YAML mapping plus environment overrides.

        Args:
            data: Parsed configuration (may be None or empty)
            environ: Environment to read overrides from (default: os.environ)

        Returns:
            SurrealConfig with every field resolved

        Raises:
            ConfigurationError: If a value has the wrong type or range
        """
        data = data or {}
        if not isinstance(data, Mapping):
            raise ConfigurationError("Configuration root must be a mapping")
        environ = os.environ if environ is None else environ

        arena = _section(data, "arena")
        laws = _section(data, "laws")

        node_budget = _positive_int(arena.get("node_budget", DEFAULT_NODE_BUDGET), "arena.node_budget")
        override = environ.get(NODE_BUDGET_ENV)
        if override is not None and override.strip():
            try:
                node_budget = _positive_int(int(override), NODE_BUDGET_ENV)
            except ValueError as e:
                raise ConfigurationError(f"{NODE_BUDGET_ENV} must be an integer, got {override!r}") from e
            logger.debug("Node budget overridden from environment: %d", node_budget)

        return cls(
            node_budget=node_budget,
            recursion_limit=_positive_int(
                arena.get("recursion_limit", DEFAULT_RECURSION_LIMIT), "arena.recursion_limit"
            ),
            counterexample_limit=_positive_int(
                laws.get("counterexample_limit", DEFAULT_COUNTEREXAMPLE_LIMIT), "laws.counterexample_limit"
            ),
            tuple_limit=_positive_int(laws.get("tuple_limit", DEFAULT_TUPLE_LIMIT), "laws.tuple_limit"),
        )

    @classmethod
    def load(
        cls,
        config_path: Union[str, Path] = DEFAULT_CONFIG_PATH,
        environ: Optional[Mapping[str, str]] = None,
    ) -> "SurrealConfig":
        """
        Load configuration from a YAML file, using defaults if it is missing.

        Raises:
            ConfigurationError: If the file cannot be read or parsed
        """
        path = Path(config_path)
        if not path.exists():
            logger.debug("No config at %s, using defaults", path)
            return cls.from_mapping({}, environ)
        try:
            with open(path) as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid YAML in config file {path}: {e}") from e
        except OSError as e:
            raise ConfigurationError(f"Error loading config from {path}: {e}") from e
        return cls.from_mapping(data, environ)


def _section(data: Mapping[str, Any], name: str) -> Dict[str, Any]:
    section = data.get(name) or {}
    if not isinstance(section, Mapping):
        raise ConfigurationError(f"Config section '{name}' must be a mapping")
    return dict(section)


def _positive_int(raw: Any, key: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int) or raw <= 0:
        raise ConfigurationError(f"{key} must be a positive integer, got {raw!r}")
    return raw
