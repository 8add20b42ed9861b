"""Configuration loading and saving utilities."""

import json
import os
from pathlib import Path
from typing import Optional, Union

from ..utils.constants import (
    CONFIG_FILE,
    DEFAULT_TOWER_CAP,
    MAX_N_ENV,
    PREC_ENV,
    SEED_ENV,
    TOWER_CAP_ENV,
)
from ..utils.logging_config import get_logger
from .models import SuiteConfig

logger = get_logger(__name__)

PathLike = Union[str, Path]


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}")
        return None


def load_suite_config(path: Optional[PathLike] = None) -> Optional[SuiteConfig]:
    """Load the verification config: defaults < JSON file < environment variables."""
    config_path = Path(path or CONFIG_FILE)
    config_data = {}
    try:
        with open(config_path, 'r') as f:
            config_data = json.load(f)
            logger.info(f"Loaded suite config from {config_path}")
    except FileNotFoundError:
        logger.debug(f"{config_path} not found, using defaults")
    except Exception as e:
        logger.error(f"Error loading config: {e}")
        return None

    try:
        config = SuiteConfig.from_dict(config_data)
        # Priority order: Environment variables > Config file
        for env_name, attr in ((MAX_N_ENV, 'max_n'), (PREC_ENV, 'prec'), (SEED_ENV, 'seed')):
            value = _env_int(env_name)
            if value is not None:
                setattr(config, attr, value)
        config.validate()
        return config
    except Exception as e:
        logger.error(f"Error creating config: {e}")
        return None


def save_suite_config(config: SuiteConfig, path: Optional[PathLike] = None) -> bool:
    """Save a suite configuration as JSON."""
    config_path = Path(path or CONFIG_FILE)
    try:
        config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(config_path, 'w') as f:
            json.dump(config.to_dict(), f, indent=2)
        logger.info(f"Configuration saved to {config_path}")
        return True
    except Exception as e:
        logger.error(f"Error saving config: {e}")
        return False


def tower_cap_from_env() -> int:
    """Guard cap on tower indices; CARLITZ_CACHE_CAP overrides the default."""
    value = _env_int(TOWER_CAP_ENV)
    if value is None:
        return DEFAULT_TOWER_CAP
    if value < 1:
        logger.warning(f"Ignoring {TOWER_CAP_ENV}={value}; the cap must be >= 1")
        return DEFAULT_TOWER_CAP
    return value
