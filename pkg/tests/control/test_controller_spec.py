import numpy as np
import pytest

from rodwheel.control import (
    CASE1,
    CASE2,
    NO_CONTROL,
    ControllerSpec,
    control_case1,
    get_spec,
    make_controller,
    with_overrides,
)
from rodwheel.errors import InvalidControllerError


def test_unknown_kind():
    with pytest.raises(InvalidControllerError) as e:
        ControllerSpec(kind="pid")

    assert "pid" in e.exconly()


def test_non_positive_clamp():
    with pytest.raises(InvalidControllerError):
        ControllerSpec(kind="custom", clamp=0.0)


def test_none_rejects_gains():
    with pytest.raises(InvalidControllerError) as e:
        ControllerSpec(kind="none", k_p=100.0)

    assert "custom" in e.exconly()


def test_none_rejects_overrides():
    with pytest.raises(InvalidControllerError):
        with_overrides(NO_CONTROL, k_theta=20.0)


def test_get_spec():
    assert get_spec("case2") is CASE2
    assert get_spec("none") is NO_CONTROL


def test_get_spec_custom_is_not_a_preset():
    with pytest.raises(InvalidControllerError):
        get_spec("custom")


def test_with_overrides_without_overrides():
    expected = CASE1
    actual = with_overrides(CASE1)

    assert actual is expected


def test_with_overrides_makes_custom():
    expected = ControllerSpec(kind="custom", k_p=20.0, k_d=20.0, a=1.0, v_ref=3.0)
    actual = with_overrides(CASE1, v_ref=3)

    assert actual == expected


def test_with_overrides_unknown_parameter():
    with pytest.raises(InvalidControllerError) as e:
        with_overrides(CASE1, k_i=1.0)

    assert "k_i" in e.exconly()


def test_with_overrides_non_numeric():
    with pytest.raises(InvalidControllerError):
        with_overrides(CASE1, k_p="fast")


def test_make_controller_presets():
    assert make_controller(CASE1) is control_case1
    assert make_controller(NO_CONTROL)(np.ones(10)) == 0.0


def test_make_controller_custom(case1_state):
    controller = make_controller(with_overrides(CASE1, k_d=0.0))

    expected = control_case1(case1_state)
    actual = controller(case1_state)

    assert actual == expected


def test_to_json():
    expected = {
        "kind": "case2",
        "k_p": 5.0,
        "k_d": 5.0,
        "k_theta": 20.0,
        "a": 0.2,
        "v_ref": 10.0,
        "clamp": None,
    }
    actual = CASE2.to_json()

    assert actual == expected
