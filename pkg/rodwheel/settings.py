import logging
from typing import Any, Dict, Optional


logger = logging.getLogger(__name__)


SETTINGS_KEY = "RODWHEEL"

DEFAULTS: Dict[str, Any] = {
    "DEBUG": False,
    "FALL_THRESHOLD": 1.4,
    "PIVOT_TOLERANCE": 1e-12,
    "RESIDUAL_TOLERANCE": 1e-9,
    "DIVERGENCE_TOLERANCE": 0.1,
    "FD": {
        "STEP": 1e-5,
        "TOLERANCE": 1e-6,
    },
    "AUDIT": {
        "RANDOM_STATES": 100,
        "SEED": 20230,
        "MAX_THETA": 1.2,
        "CONSTRAINT_TOLERANCE": 1e-8,
        "ENERGY_DRIFT_TOLERANCE": 5e-2,
        "WORK_BALANCE_TOLERANCE": 5e-2,
    },
    "SWEEP_WORKERS": None,
}

_settings: Dict[str, Any] = {}


def configure(rodwheel_settings: Optional[Dict[str, Any]] = None, **kwargs) -> None:
    """
    Override settings for the current process. Nested dictionaries (`FD`, `AUDIT`) are merged
    key-by-key so partial overrides keep the remaining defaults.
    """

    overrides = {**(rodwheel_settings or {}), **kwargs}

    for key, value in overrides.items():
        if key not in DEFAULTS:
            logger.warning(f"Unknown {SETTINGS_KEY} setting '{key}' is ignored.")
            continue

        if isinstance(DEFAULTS[key], dict) and isinstance(value, dict):
            _settings[key] = {**_settings.get(key, {}), **value}
        else:
            _settings[key] = value


def reset() -> None:
    _settings.clear()


def get_settings() -> Dict[str, Any]:
    rodwheel_settings = {}

    for key, default in DEFAULTS.items():
        if isinstance(default, dict):
            rodwheel_settings[key] = {**default, **_settings.get(key, {})}
        else:
            rodwheel_settings[key] = _settings.get(key, default)

    return rodwheel_settings


def get_setting(key, default=None):
    rodwheel_settings = get_settings()

    return rodwheel_settings.get(key, default)


def get_debug() -> bool:
    """
    Default is `False`.
    """

    return bool(get_setting("DEBUG", False))


def get_fall_threshold() -> float:
    """
    Stand angle (rad) at which a run is declared fallen. Default is 1.4, safely below the
    mass-matrix singularity at pi/2.
    """

    return get_setting("FALL_THRESHOLD")


def get_pivot_tolerance() -> float:
    return get_setting("PIVOT_TOLERANCE")


def get_residual_tolerance() -> float:
    return get_setting("RESIDUAL_TOLERANCE")


def get_divergence_tolerance() -> float:
    """
    Largest energy error one integration step may make, relative to `max(|E|, 1)`, before the
    run is stopped as diverged. Default is 0.1.
    """

    return get_setting("DIVERGENCE_TOLERANCE")


def get_fd_settings() -> Dict[str, Any]:
    return get_setting("FD", {})


def get_audit_settings() -> Dict[str, Any]:
    return get_setting("AUDIT", {})


def get_sweep_workers() -> Optional[int]:
    """
    Default is `None`, i.e. one worker per CPU. `1` runs every sweep value in-process.
    """

    return get_setting("SWEEP_WORKERS")