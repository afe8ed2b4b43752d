import numpy as np
import pytest

from rodwheel import settings
from rodwheel.sim import (
    Sample,
    Scenario,
    Trajectory,
    audit_constraints,
    audit_energy,
    audit_ground_work,
    simulate,
    summarize,
)
from rodwheel.sim.audit import motor_work, relative_drift


def _sample(t, state, u=0.0, E=0.0):
    return Sample(
        t=t, state=np.asarray(state, dtype=float), u=u, E=E, lambda1=0.0, lambda2=0.0
    )


def test_relative_drift():
    expected = 0.1
    actual = relative_drift([10.0, 11.0, 9.5])

    assert actual == pytest.approx(expected)


def test_relative_drift_small_energy():
    # Scaled by at least 1
    expected = 0.25
    actual = relative_drift([0.0, 0.25])

    assert actual == expected


def test_single_sample_has_no_drift():
    traj = Trajectory(dt=0.01, samples=[_sample(0.0, np.zeros(10), E=78.48)])

    actual = audit_energy(traj)

    assert actual.drift == 0.0
    assert actual.balance_residual == 0.0


def test_motor_work():
    first = np.zeros(10)
    first[6] = 1.0
    second = np.zeros(10)
    second[6] = 4.0
    second[9] = 1.0

    traj = Trajectory(
        dt=0.5, samples=[_sample(0.0, first, u=2.0), _sample(0.5, second, u=7.0)]
    )

    expected = np.array([0.0, 2.0])
    actual = motor_work(traj)

    np.testing.assert_allclose(actual, expected)


def test_balance_against_motor_work():
    first = np.zeros(10)
    first[6] = 1.0
    second = np.zeros(10)
    second[6] = 3.0

    traj = Trajectory(
        dt=1.0,
        samples=[
            _sample(0.0, first, u=1.5, E=10.0),
            _sample(1.0, second, u=0.0, E=13.0),
        ],
    )

    actual = audit_energy(traj)

    assert actual.balance_residual == pytest.approx(0.0, abs=1e-15)
    assert actual.drift == pytest.approx(0.3)


def test_static_constraints():
    traj = Trajectory(dt=0.01, samples=[_sample(0.0, np.zeros(10))])

    expected = 0.0
    actual = audit_constraints(traj)

    assert actual == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize(
    "audit", [audit_energy, audit_constraints, audit_ground_work, summarize]
)
def test_empty_trajectory(audit):
    with pytest.raises(ValueError) as e:
        audit(Trajectory(dt=0.01))

    assert "empty" in e.exconly()


def test_singular_samples_are_skipped():
    traj = Trajectory(dt=0.01, samples=[_sample(0.0, np.ones(10))])
    settings.configure(PIVOT_TOLERANCE=10.0)

    assert audit_constraints(traj) == 0.0
    assert audit_ground_work(traj) == 0.0


def test_short_uncontrolled_run():
    traj = simulate(Scenario(duration=0.5))

    assert audit_energy(traj).drift <= 1e-3
    assert audit_constraints(traj) <= 1e-8
    assert audit_ground_work(traj) <= 1e-8


def test_summarize():
    traj = simulate(Scenario(name="short", duration=0.2))

    actual = summarize(traj)

    assert actual.scenario == "short"
    assert actual.samples == 21
    assert actual.fell is False
    assert actual.t_fall is None
    assert actual.fall_reason is None
    assert actual.final_time == pytest.approx(0.2)
    assert actual.final_dphi == traj.final_state[6]
    assert actual.checksum == traj.checksum()
    assert len(actual.final_state) == 10
