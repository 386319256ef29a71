"""Configuration management for the CLI."""

import os
from pathlib import Path
from typing import Any, Optional

import yaml
from dotenv import load_dotenv
from pydantic import ValidationError

from sesx.config.schemas import SesxConfigSchema
from sesx.errors import ConfigError

load_dotenv()

CONFIG_ENV_VAR = "SESX_CONFIG"
DEFAULT_CONFIG_PATH = Path.home() / ".sesx" / "config.yaml"
LOCAL_CONFIG_NAME = "sesx.yaml"

# environment variable -> (section, key)
ENV_OVERRIDES = {
    "SESX_MAX_RAW_LEN": ("compress", "max_raw_len"),
    "SESX_ALPHABET_SIZE": ("solver", "alphabet_size"),
    "SESX_LOG_LEVEL": ("logging", "level"),
}


def get_config_path() -> Path:
    """Get the config file path ($SESX_CONFIG, then local, then global)."""
    explicit = os.getenv(CONFIG_ENV_VAR)
    if explicit:
        return Path(explicit).expanduser()
    local = Path.cwd() / LOCAL_CONFIG_NAME
    if local.exists():
        return local
    return DEFAULT_CONFIG_PATH


def get_default_config() -> dict[str, Any]:
    """Return default configuration."""
    return SesxConfigSchema().model_dump()


def _merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _apply_env(config: dict[str, Any]) -> dict[str, Any]:
    for var, (section, key) in ENV_OVERRIDES.items():
        value = os.getenv(var)
        if value:
            config.setdefault(section, {})[key] = value
    return config


def validate_config(config: dict[str, Any]) -> dict[str, Any]:
    """Validate against the schema; return the normalised dict."""
    try:
        return SesxConfigSchema(**config).model_dump()
    except (ValidationError, TypeError) as e:
        raise ConfigError(f"invalid configuration: {e}")


def load_config(path: Optional[Path] = None) -> dict[str, Any]:
    """Load configuration from YAML, merged over defaults and environment overrides."""
    config_path = path or get_config_path()
    config: dict[str, Any] = {}
    if config_path.exists():
        try:
            with open(config_path) as f:
                config = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"{config_path}: {e}")
        if not isinstance(config, dict):
            raise ConfigError(f"{config_path}: top level must be a mapping")
    return validate_config(_apply_env(_merge(get_default_config(), config)))


def save_config(config: dict[str, Any], path: Optional[Path] = None) -> Path:
    """Save configuration to YAML file."""
    config_path = path or get_config_path()
    config_path.parent.mkdir(parents=True, exist_ok=True)

    with open(config_path, "w") as f:
        yaml.dump(config, f, default_flow_style=False)
    return config_path


def init_config() -> tuple[Path, bool]:
    """Initialize configuration file with defaults.

    Returns the path and whether it was written; an existing file is kept.
    """
    explicit = os.getenv(CONFIG_ENV_VAR)
    config_path = Path(explicit).expanduser() if explicit else DEFAULT_CONFIG_PATH

    if config_path.exists():
        return config_path, False
    save_config(get_default_config(), config_path)
    return config_path, True
