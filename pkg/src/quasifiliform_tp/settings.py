from pydantic import BaseModel, Field, ValidationError

import json
import logging
import os

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS_PATH = f"{os.path.dirname(os.path.realpath(__file__))}/resources/settings.json"

ENVIRONMENT_OVERRIDES = {
    "TPA_THREADS": "threads",
    "TPA_SAMPLES": "samples",
    "TPA_SEED": "seed",
    "TPA_BOUND": "bound",
}


class SettingsError(ValueError):
    """Raised when a settings file or an environment override is invalid"""

    pass


class Settings(BaseModel):
    samples: int = Field(default=25, ge=0)
    """Parameter samples per transposed Poisson variant"""
    seed: int = 1
    """First seed of the sample sequence"""
    bound: int = Field(default=5, ge=1)
    """Bound on sampled numerators and denominators"""
    n_grid: list[int] = [5, 6, 7, 8, 9, 10, 11]
    """Dimensions swept by ``verify-all``"""
    n_max: int = Field(default=21, ge=1)
    """Largest dimension for ``derivations verify --all``"""
    threads: int | None = Field(default=None, ge=1)
    """Worker processes for sweeps; None means one per CPU"""
    max_retries: int = Field(default=100, ge=0)
    """Redraws allowed per sample to satisfy domain constraints"""


def load_settings(path: str | None = None, environ: dict[str, str] | None = None) -> Settings:
    """Loads the sweep defaults and applies environment overrides.

    :param path: JSON settings file. If None, uses the packaged defaults.
    :type path: str | None
    :param environ: Environment to read overrides from. If None, uses ``os.environ``.
    :type environ: dict[str, str] | None
    :return: The validated settings
    :rtype: Settings
    :raises SettingsError: Raised if the file or an override is invalid
    """
    if path is None:
        path = DEFAULT_SETTINGS_PATH
    if environ is None:
        environ = dict(os.environ)

    try:
        with open(path) as settings_file:
            data = json.load(settings_file)
    except (OSError, json.JSONDecodeError) as e:
        raise SettingsError(f"Cannot read settings from {path}: {e}")

    for variable, field in ENVIRONMENT_OVERRIDES.items():
        value = environ.get(variable)
        if value is None or value.strip() == "":
            continue
        try:
            data[field] = int(value)
        except ValueError:
            raise SettingsError(f"{variable} must be an integer, got {value!r}")
        logger.debug(f"{field} = {data[field]} from {variable}")

    try:
        return Settings(**data)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
            for error in e.errors()
        )
        raise SettingsError(f"Invalid settings: {problems}")
