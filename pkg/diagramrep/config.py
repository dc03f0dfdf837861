"""Settings from .diagramrep.yaml and the environment."""

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import typer
import yaml

CONFIG_FILENAME = ".diagramrep.yaml"
MAX_SIZE_ENV = "DIAGRAMREP_MAX_SIZE"
DEFAULT_MAX_SIZE = 16


@dataclass(frozen=True)
class Settings:
    """Resolved defaults shared by the CLI and the verification suites."""

    semiring: str = "boolean"
    order: str = "binary"
    seed: int = 0
    jobs: int = 1
    format: str = "text"
    max_size: int = DEFAULT_MAX_SIZE
    random_cases: Optional[int] = None
    suites: Tuple[str, ...] = ()

    def with_overrides(self, **overrides: Any) -> "Settings":
        """Apply command-line values, ignoring the ones left unset."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def load_config(root: Path) -> Optional[Dict[str, Any]]:
    """Load .diagramrep.yaml from `root`, or None if absent or unreadable."""
    config_file = root / CONFIG_FILENAME
    if not config_file.exists():
        return None

    try:
        with open(config_file, "r") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        typer.secho(f"Warning: Invalid {CONFIG_FILENAME} file: {e}", fg="yellow")
        return None
    except Exception as e:
        typer.secho(f"Warning: Could not read {CONFIG_FILENAME}: {e}", fg="yellow")
        return None

    if data is None:
        return {}
    if not isinstance(data, dict):
        typer.secho(
            f"Warning: {CONFIG_FILENAME} must contain a mapping, ignoring it.",
            fg="yellow",
        )
        return None
    return data


def env_max_size() -> Optional[int]:
    """The enumeration guard from DIAGRAMREP_MAX_SIZE, if set and valid."""
    raw = os.getenv(MAX_SIZE_ENV)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw)
    except ValueError:
        typer.secho(
            f"Warning: Ignoring {MAX_SIZE_ENV}={raw!r}: not an integer.", fg="yellow"
        )
        return None
    if value < 0:
        typer.secho(f"Warning: Ignoring negative {MAX_SIZE_ENV}={value}.", fg="yellow")
        return None
    return value


def default_max_size() -> int:
    """Enumeration guard used when callers do not pass one explicitly."""
    value = env_max_size()
    return DEFAULT_MAX_SIZE if value is None else value


def _section(config: Dict[str, Any], name: str) -> Dict[str, Any]:
    section = config.get(name) or {}
    if not isinstance(section, dict):
        typer.secho(f"Warning: '{name}' in {CONFIG_FILENAME} must be a mapping, ignoring it.", fg="yellow")
        return {}
    return section


def _integers(section: Dict[str, Any], keys: Tuple[str, ...]) -> Dict[str, int]:
    values = {}
    for key in keys:
        if key in section:
            try:
                values[key] = int(section[key])
            except (TypeError, ValueError):
                typer.secho(f"Warning: Ignoring non-integer '{key}' in {CONFIG_FILENAME}", fg="yellow")
    return values


def resolve_settings(config: Optional[Dict[str, Any]]) -> Settings:
    """Merge a loaded config mapping and the environment over the built-in defaults."""
    settings = Settings()
    if config:
        defaults = _section(config, "defaults")
        verify = _section(config, "verify")
        values: Dict[str, Any] = {}
        for key in ("semiring", "order", "format"):
            if key in defaults:
                values[key] = str(defaults[key])
        values.update(_integers(defaults, ("seed", "jobs", "max_size")))
        values.update(_integers(verify, ("seed", "random_cases")))
        suites = verify.get("suites", [])
        if isinstance(suites, list):
            values["suites"] = tuple(str(s) for s in suites)
        settings = replace(settings, **values)

    # The environment wins over the file.
    env_value = env_max_size()
    if env_value is not None:
        settings = replace(settings, max_size=env_value)
    return settings


def load_settings(root: Optional[Path] = None) -> Settings:
    """Settings for the current working directory (or `root`)."""
    return resolve_settings(load_config(root or Path.cwd()))
