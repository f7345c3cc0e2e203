import logging
import os
from dataclasses import fields
from pathlib import Path
from typing import Any, Dict, Optional, Union

from .errors import UsageError
from .types import LabConfig

logger = logging.getLogger(__name__)

# Environment variable -> LabConfig field
ENV_VARS = {
    "CASIMIR_NULL_TOL": "null_tol",
    "CASIMIR_ADMISSIBILITY_MARGIN": "admissibility_margin",
    "CASIMIR_SERIES_REL_TOL": "series_rel_tol",
    "CASIMIR_MASSLESS_CROSSOVER": "massless_crossover",
    "CASIMIR_DEFAULT_MASS": "default_mass",
    "CASIMIR_DEFAULT_PLATE_SEPARATION": "default_plate_separation",
    "CASIMIR_WORKERS": "workers",
    "CASIMIR_LOG_LEVEL": "log_level",
}


def coerce_config(config: Optional[Union[LabConfig, Dict[str, Any]]]) -> LabConfig:
    """Convert a dict to LabConfig if needed (None gives the defaults)"""
    if config is None:
        return LabConfig()
    if isinstance(config, LabConfig):
        return config
    if isinstance(config, dict):
        known = {f.name for f in fields(LabConfig)}
        unknown = set(config) - known
        if unknown:
            raise UsageError(f"Unknown LabConfig keys: {', '.join(sorted(unknown))}")
        return validate_config(LabConfig(**config))
    raise UsageError(f"config must be a LabConfig or dict, got {type(config).__name__}")


def validate_config(config: LabConfig) -> LabConfig:
    if not 0 < config.series_rel_tol <= 1e-8:
        raise UsageError(f"series_rel_tol must lie in (0, 1e-8], got {config.series_rel_tol}")
    if config.null_tol < 0:
        raise UsageError(f"null_tol must be non-negative, got {config.null_tol}")
    if not 0 <= config.admissibility_margin < 1:
        raise UsageError(
            f"admissibility_margin must lie in [0, 1), got {config.admissibility_margin}"
        )
    if config.massless_crossover < 0:
        raise UsageError(f"massless_crossover must be >= 0, got {config.massless_crossover}")
    if config.workers < 1:
        raise UsageError(f"workers must be >= 1, got {config.workers}")
    return config


def load_config_from_env(env_file: Optional[Union[str, Path]] = None) -> LabConfig:
    """
    Build a LabConfig from CASIMIR_* environment variables.

    Args:
        env_file: Optional .env file loaded first with python-dotenv
            (existing environment variables win)

    Returns:
        Validated LabConfig
    """
    from dotenv import load_dotenv

    if env_file is not None:
        env_path = Path(env_file)
        if env_path.exists():
            load_dotenv(env_path)
            logger.info("Loaded environment variables from %s", env_path)
        else:
            logger.warning("No .env file found at %s", env_path)
    else:
        load_dotenv()

    defaults = LabConfig()
    values: Dict[str, Any] = {}
    for var, name in ENV_VARS.items():
        raw = os.getenv(var)
        if raw is None or raw.strip() == "":
            continue
        kind = type(getattr(defaults, name))
        try:
            values[name] = kind(raw.strip())
        except ValueError:
            raise UsageError(f"{var}={raw!r} is not a valid {kind.__name__}")
    return validate_config(LabConfig(**values))
