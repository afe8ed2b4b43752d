import importlib
import logging

import numpy as np
import pytest

from rodwheel import settings
from rodwheel.control import CASE1
from rodwheel.errors import ScenarioValidationError, SingularMassError
from rodwheel.lagrangian import total_energy
from rodwheel.sim import FREE_INITIAL_STATE, Scenario, rk2_step, simulate
from rodwheel.sim.trajectory import (
    FALL_REASON_DIVERGED,
    FALL_REASON_SINGULAR,
    FALL_REASON_THETA,
)


simulate_module = importlib.import_module("rodwheel.sim.simulate")


def _short(**changes):
    return Scenario(name="short", duration=0.5).with_changes(**changes)


def test_sample_times():
    traj = simulate(_short())

    expected = np.arange(51) * 0.01
    actual = traj.times

    np.testing.assert_array_equal(actual, expected)
    assert not traj.fell


def test_first_sample(params):
    traj = simulate(_short())
    first = traj.samples[0]

    np.testing.assert_array_equal(first.state, FREE_INITIAL_STATE)
    assert first.u == 0.0
    assert first.E == total_energy(np.array(FREE_INITIAL_STATE), params)
    assert np.all(np.isfinite(traj.lambdas))


def test_controller_is_evaluated(case1_state):
    traj = simulate(_short(x0=tuple(case1_state), controller=CASE1, duration=0.1))

    assert traj.samples[0].u == pytest.approx(43.551, abs=1e-3)


def test_deterministic():
    expected = simulate(_short()).to_csv()
    actual = simulate(_short()).to_csv()

    assert actual == expected


def test_immediate_fall():
    x0 = list(FREE_INITIAL_STATE)
    x0[3] = 1.45

    traj = simulate(_short(x0=tuple(x0)))

    assert len(traj) == 1
    assert traj.fall.t == 0.0
    assert traj.fall.reason == FALL_REASON_THETA
    assert traj.fall.theta == 1.45


def test_fall_threshold_setting():
    settings.configure(FALL_THRESHOLD=0.25)

    traj = simulate(_short())

    assert traj.fell
    assert len(traj) == 1


def test_tilted_wheel_falls():
    x0 = (0.0, 0.0, 0.0, 1.3, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    traj = simulate(_short(x0=x0, duration=3.0))

    assert traj.fell
    assert traj.fall.reason in (
        FALL_REASON_THETA,
        FALL_REASON_SINGULAR,
        FALL_REASON_DIVERGED,
    )
    assert traj.fall.t < 3.0
    assert np.all(np.abs(traj.states[:-1, 3]) < 1.4)


def test_fall_is_logged(caplog):
    x0 = list(FREE_INITIAL_STATE)
    x0[3] = -1.45

    with caplog.at_level(logging.WARNING, logger="rodwheel.sim.simulate"):
        simulate(_short(x0=tuple(x0)))

    assert "fell at t=0.000s" in caplog.text


def test_steps():
    expected = 800
    actual = Scenario().steps

    assert actual == expected


@pytest.mark.parametrize(
    "dt,duration,expected",
    [
        (0.01, 0.5, 50),
        (0.005, 1.0, 200),
        (0.3, 1.0, 3),
        (0.4, 1.0, 2),
    ],
)
def test_steps_do_not_overshoot(dt, duration, expected):
    actual = Scenario(dt=dt, duration=duration).steps

    assert actual == expected
    assert actual * dt <= duration + 1e-12


def test_last_sample_within_duration():
    traj = simulate(_short(dt=0.03, duration=0.1))

    expected = [0.0, 0.03, 0.06, 0.09]
    actual = traj.times

    np.testing.assert_allclose(actual, expected)


@pytest.mark.parametrize(
    "changes,field",
    [
        ({"x0": (0.0,) * 9}, "initial_state"),
        ({"x0": (0.0, 0.0, 0.0, np.pi / 2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)}, "theta"),
        ({"x0": (np.nan,) * 10}, "initial_state"),
        ({"dt": 0.0}, "dt"),
        ({"duration": 0.001}, "duration"),
        ({"sample_stride": 0}, "sample_stride"),
    ],
)
def test_invalid(changes, field):
    with pytest.raises(ScenarioValidationError) as e:
        Scenario(**changes)

    assert field in e.exconly()


def test_checksum():
    assert Scenario().checksum() == Scenario().checksum()
    assert Scenario().checksum() != Scenario(dt=0.005).checksum()


def _blow_up_on(call, offset):
    calls = []

    def step(x, u, dt, params, k1=None):
        calls.append(x)
        x_next = rk2_step(x, u, dt, params, k1=k1)

        if len(calls) == call:
            return x_next + offset

        return x_next

    return step


def test_divergence_is_not_recorded(monkeypatch):
    offset = np.zeros(10)
    offset[7] = 1e4
    monkeypatch.setattr(simulate_module, "rk2_step", _blow_up_on(call=3, offset=offset))

    traj = simulate(_short())

    assert traj.fall.reason == FALL_REASON_DIVERGED
    assert traj.fall.t == pytest.approx(0.03)
    assert len(traj) == 3
    assert np.all(np.abs(traj.states[:, 7]) < 100)


def test_non_finite_step(monkeypatch):
    offset = np.full(10, np.nan)
    monkeypatch.setattr(simulate_module, "rk2_step", _blow_up_on(call=1, offset=offset))

    traj = simulate(_short())

    assert traj.fall.reason == FALL_REASON_DIVERGED
    assert traj.fall.t == pytest.approx(0.01)
    assert traj.fall.theta is None
    assert len(traj) == 1


def test_singular_step_records_next_time(monkeypatch):
    def step(x, u, dt, params, k1=None):
        raise SingularMassError("Mass matrix is singular", theta=float(x[3]))

    monkeypatch.setattr(simulate_module, "rk2_step", step)

    traj = simulate(_short())

    assert traj.fall.reason == FALL_REASON_SINGULAR
    assert traj.fall.t == pytest.approx(0.01)
    assert len(traj) == 1


def test_divergence_tolerance_setting(monkeypatch):
    offset = np.zeros(10)
    offset[7] = 1e4
    monkeypatch.setattr(simulate_module, "rk2_step", _blow_up_on(call=3, offset=offset))
    settings.configure(DIVERGENCE_TOLERANCE=1e30)

    traj = simulate(_short(duration=0.05))

    assert len(traj) > 3

