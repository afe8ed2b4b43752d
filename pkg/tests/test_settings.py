import logging

from rodwheel import settings
from rodwheel.settings import (
    get_audit_settings,
    get_debug,
    get_divergence_tolerance,
    get_fall_threshold,
    get_fd_settings,
    get_pivot_tolerance,
    get_residual_tolerance,
    get_settings,
    get_sweep_workers,
)


def test_defaults():
    assert get_debug() is False
    assert get_fall_threshold() == 1.4
    assert get_pivot_tolerance() == 1e-12
    assert get_residual_tolerance() == 1e-9
    assert get_divergence_tolerance() == 0.1
    assert get_fd_settings() == {"STEP": 1e-5, "TOLERANCE": 1e-6}
    assert get_sweep_workers() is None


def test_configure():
    settings.configure(FALL_THRESHOLD=1.2, SWEEP_WORKERS=1)

    assert get_fall_threshold() == 1.2
    assert get_sweep_workers() == 1


def test_configure_with_dict():
    settings.configure({"DEBUG": True})

    assert get_debug() is True


def test_nested_settings_are_merged():
    settings.configure(AUDIT={"SEED": 7})
    settings.configure(AUDIT={"MAX_THETA": 0.5})

    actual = get_audit_settings()

    assert actual["SEED"] == 7
    assert actual["MAX_THETA"] == 0.5
    assert actual["RANDOM_STATES"] == 100


def test_unknown_setting(caplog):
    with caplog.at_level(logging.WARNING, logger="rodwheel.settings"):
        settings.configure(FALL_ANGLE=1.0)

    assert "Unknown RODWHEEL setting 'FALL_ANGLE'" in caplog.text
    assert "FALL_ANGLE" not in get_settings()


def test_reset():
    settings.configure(DEBUG=True)
    settings.reset()

    assert get_debug() is False


def test_get_settings_is_a_copy():
    get_settings()["FD"]["STEP"] = 1.0

    assert get_fd_settings()["STEP"] == 1e-5
