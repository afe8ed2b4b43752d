import numpy as np
import pytest

from rodwheel.eom import (
    _assemble,
    constraint_drift,
    constraint_matrix,
    mass_matrix,
    rhs_vector,
)
from rodwheel.oracle import random_states


def test_block_structure(params, free_state):
    q = free_state[:6]
    M = mass_matrix(q, params)
    A = constraint_matrix(q, params)

    np.testing.assert_array_equal(M[:2, :2], np.zeros((2, 2)))
    np.testing.assert_array_equal(M[:2, 2:], A)
    np.testing.assert_array_equal(M[2:, :2], -A.T)
    assert M[2, 2] == pytest.approx(params.m + params.mu, rel=1e-12)


def test_independent_of_rates(params):
    for x in random_states(10, seed=3):
        q = x[:6]

        expected = mass_matrix(q, params)
        (actual, _) = _assemble(q, np.random.default_rng(3).uniform(-3, 3, size=6), params)

        np.testing.assert_allclose(actual, expected, atol=1e-12)


def test_rhs_at_rest_upright(params):
    expected = np.zeros(8)
    actual = rhs_vector(np.zeros(6), np.zeros(4), params)

    np.testing.assert_allclose(actual, expected, atol=1e-12)


def test_rhs_constraint_rows_vanish_at_rest(params):
    for x in random_states(10, seed=4):
        actual = rhs_vector(x[:6], np.zeros(4), params)[:2]

        np.testing.assert_array_equal(actual, np.zeros(2))


def test_rhs_constraint_rows_are_drift(params, free_state):
    from rodwheel.eom import full_rates

    q = free_state[:6]

    expected = -constraint_drift(q, full_rates(q, free_state[6:], params), params)
    actual = rhs_vector(q, free_state[6:], params)[:2]

    np.testing.assert_array_equal(actual, expected)


def test_constraint_drift_against_differences(params, free_state):
    from rodwheel.eom import full_rates

    q = free_state[:6]
    dq = full_rates(q, free_state[6:], params)
    h = 1e-6

    expected = (
        constraint_matrix(q + h * dq, params) - constraint_matrix(q - h * dq, params)
    ) @ dq / (2 * h)
    actual = constraint_drift(q, dq, params)

    np.testing.assert_allclose(actual, expected, atol=1e-8)
