import numpy as np

from rodwheel.eom import constrained_velocities, constraint_matrix, full_rates


def test_upright_heading_zero(params):
    expected = np.array(
        [
            [1.0, 0.0, 0.0, -1.0, 0.0, 0.0],
            [0.0, 1.0, 1.0, 0.0, 0.0, 0.0],
        ]
    )
    actual = constraint_matrix(np.zeros(6), params)

    np.testing.assert_array_equal(actual, expected)


def test_heading_quarter_turn(params):
    expected = np.array(
        [
            [1.0, 0.0, -1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, -1.0, 0.0, 0.0],
        ]
    )
    actual = constraint_matrix([0.0, 0.0, 0.0, 0.0, np.pi / 2, 0.0], params)

    np.testing.assert_allclose(actual, expected, atol=1e-15)


def test_rod_column_is_zero(params):
    rng = np.random.default_rng(0)

    for q in rng.uniform(-np.pi, np.pi, size=(10, 6)):
        np.testing.assert_array_equal(constraint_matrix(q, params)[:, 5], [0.0, 0.0])


def test_rolling_forward(params):
    expected = (0.0, -1.0)
    actual = constrained_velocities(np.zeros(6), (1.0, 0.0, 0.0), params)

    assert actual == expected


def test_free_start(params, free_state):
    expected = (-3 * np.cos(0.3), -6.0)
    actual = constrained_velocities(free_state[:6], free_state[6:], params)

    np.testing.assert_allclose(actual, expected, rtol=1e-14)
    assert abs(actual[0] - -2.8660) < 1e-4


def test_full_rates_satisfy_constraints(params):
    rng = np.random.default_rng(1)

    for _ in range(20):
        q = rng.uniform(-np.pi, np.pi, size=6)
        rates = rng.uniform(-3, 3, size=4)
        dq = full_rates(q, rates, params)

        np.testing.assert_allclose(constraint_matrix(q, params) @ dq, np.zeros(2), atol=1e-14)
        np.testing.assert_array_equal(dq[2:], rates)
