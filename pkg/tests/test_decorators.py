import logging

from rodwheel import settings
from rodwheel.decorators import timed


@timed
def _integrate(steps, dt=0.01, name="free"):
    return steps * dt


def test_timed_returns_result():
    expected = 1.0
    actual = _integrate(100)

    assert actual == expected


def test_timed_is_silent_without_debug(caplog):
    with caplog.at_level(logging.DEBUG, logger="profile"):
        _integrate(100)

    assert caplog.text == ""


def test_timed_logs_with_debug(caplog):
    settings.configure(DEBUG=True)

    with caplog.at_level(logging.DEBUG, logger="profile"):
        _integrate(100, name="case1")

    assert "_integrate(" in caplog.text
    assert "case1" in caplog.text
    assert "ms" in caplog.text


def test_timed_keeps_signature():
    import inspect

    expected = ["steps", "dt", "name"]
    actual = list(inspect.signature(_integrate).parameters)

    assert actual == expected
