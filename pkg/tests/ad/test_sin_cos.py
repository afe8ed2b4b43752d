import math

import numpy as np
import pytest

from rodwheel.ad import AD2, cos, sin


def test_sin():
    v = 0.7
    x = AD2.variable(v, direction=12)

    expected = (math.sin(v), math.cos(v), math.cos(v), -math.sin(v))
    actual = sin(x).as_tuple()

    assert actual == pytest.approx(expected, rel=1e-15)


def test_cos():
    v = 0.7
    x = AD2.variable(v, direction=12)

    expected = (math.cos(v), -math.sin(v), -math.sin(v), -math.cos(v))
    actual = cos(x).as_tuple()

    assert actual == pytest.approx(expected, rel=1e-15)


def test_float_passthrough():
    expected = math.sin(0.3)
    actual = sin(0.3)

    assert actual == pytest.approx(expected, rel=1e-15)


def test_array_passthrough():
    actual = cos(np.array([0.0, math.pi]))

    np.testing.assert_allclose(actual, [1.0, -1.0])


def test_chain_rule_product():
    # d²/dx² [sin(x)·cos(x)] = -4·sin(x)·cos(x)
    v = 0.4
    x = AD2.variable(v, direction=12)

    actual = x.sin() * x.cos()

    assert actual.d1 == pytest.approx(math.cos(2 * v), rel=1e-14)
    assert actual.d12 == pytest.approx(-2 * math.sin(2 * v), rel=1e-14)


def test_sin_of_square():
    v = 1.3
    x = AD2.variable(v, direction=12)

    actual = sin(x * x)

    assert actual.v == pytest.approx(math.sin(v * v), rel=1e-15)
    assert actual.d1 == pytest.approx(2 * v * math.cos(v * v), rel=1e-14)
    assert actual.d2 == actual.d1
    assert actual.d12 == pytest.approx(
        2 * math.cos(v * v) - 4 * v * v * math.sin(v * v), rel=1e-13
    )
