import pytest

from rodwheel.kinematics import Params


def test_defaults():
    params = Params()

    assert (params.m, params.g, params.r, params.mu, params.ell) == (5.0, 9.81, 1.0, 1.0, 2.0)
    assert params.legacy_potential is False


def test_inertia():
    expected = (2.5, 1.25, 1.25)
    actual = Params().inertia

    assert actual == expected


@pytest.mark.parametrize("field", ["m", "g", "r", "mu", "ell"])
def test_non_positive(field):
    with pytest.raises(ValueError) as e:
        Params(**{field: 0.0})

    assert field in e.exconly()


def test_non_finite():
    with pytest.raises(ValueError):
        Params(ell=float("nan"))
