import numpy as np
import pytest

from rodwheel.kinematics import Params
from rodwheel.lagrangian import lagrangian
from rodwheel.oracle import paper_lagrangian_closed_form


def test_at_rest(params):
    expected = -78.48
    actual = paper_lagrangian_closed_form(np.zeros(6), np.zeros(6), params)

    assert actual == pytest.approx(expected, rel=1e-14)


def test_at_rest_legacy(legacy_params):
    expected = -52.05
    actual = paper_lagrangian_closed_form(np.zeros(6), np.zeros(6), legacy_params)

    assert actual == pytest.approx(expected, rel=1e-14)


def test_legacy_argument_overrides_params(params):
    expected = -52.05
    actual = paper_lagrangian_closed_form(np.zeros(6), np.zeros(6), params, legacy=True)

    assert actual == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("legacy", [False, True])
def test_matches_engine(legacy):
    params = Params(legacy_potential=legacy)
    rng = np.random.default_rng(17)

    for _ in range(1000):
        q = rng.uniform(-np.pi, np.pi, size=6)
        q[3] = rng.uniform(-1.2, 1.2)
        dq = rng.uniform(-3, 3, size=6)

        expected = paper_lagrangian_closed_form(q, dq, params)
        actual = float(lagrangian(q, dq, params))

        assert abs(actual - expected) <= 1e-10 * max(abs(expected), 1.0)
