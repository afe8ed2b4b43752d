"""
Feedback laws for the motor torque `u`.

Every law is `u = k_p·(β − β₀) + k_d·β̇ + k_θ·|θ|` with the rod reference
`β₀ = a·tanh(v_ref − φ̇)`: the rod is leaned forward while the wheel is slower than `v_ref`.
`|θ|` is continuous but not differentiable at `θ = 0`; it is not smoothed.
"""

import logging
from dataclasses import dataclass, fields, replace
from typing import Callable, Optional

import numpy as np

from ..errors import InvalidControllerError
from ..state import BETA, DBETA, DPHI, THETA, State


logger = logging.getLogger(__name__)

CONTROLLER_KINDS = ("none", "case1", "case2", "custom")

Controller = Callable[[State], float]


@dataclass(frozen=True)
class ControllerSpec:
    kind: str = "none"
    k_p: float = 0.0
    k_d: float = 0.0
    k_theta: float = 0.0
    a: float = 0.0
    v_ref: float = 0.0
    clamp: Optional[float] = None

    def __post_init__(self):
        if self.kind not in CONTROLLER_KINDS:
            raise InvalidControllerError(
                f"Unknown controller kind '{self.kind}'. "
                f"Choose one of: {', '.join(CONTROLLER_KINDS)}."
            )

        if self.kind == "none" and (any(self.gains) or self.clamp is not None):
            raise InvalidControllerError(
                "Controller kind 'none' takes no gains, use 'custom' instead"
            )

        if self.clamp is not None and not self.clamp > 0:
            raise InvalidControllerError(
                f"Torque clamp must be positive, got {self.clamp}"
            )

    @property
    def gains(self):
        return (self.k_p, self.k_d, self.k_theta, self.a, self.v_ref)

    def to_json(self):
        return {field.name: getattr(self, field.name) for field in fields(self)}


NO_CONTROL = ControllerSpec(kind="none")
CASE1 = ControllerSpec(kind="case1", k_p=20.0, k_d=20.0, k_theta=0.0, a=1.0, v_ref=2.0)
CASE2 = ControllerSpec(kind="case2", k_p=5.0, k_d=5.0, k_theta=20.0, a=0.2, v_ref=10.0)

PRESETS = {
    "none": NO_CONTROL,
    "case1": CASE1,
    "case2": CASE2,
}


def rod_reference(dphi: float, a: float, v_ref: float) -> float:
    """
    Target rod angle `β₀ = a·tanh(v_ref − φ̇)`, bounded by `|a|`.
    """

    return a * np.tanh(v_ref - dphi)


def control_custom(x: State, spec: ControllerSpec) -> float:
    """
    Evaluate the generalized law at `x` with the gains of `spec`.

    The clamp, when set, saturates the torque to `[-clamp, clamp]`.
    """

    if spec.kind == "none":
        return 0.0

    beta_0 = rod_reference(x[DPHI], spec.a, spec.v_ref)
    u = (
        spec.k_p * (x[BETA] - beta_0)
        + spec.k_d * x[DBETA]
        + spec.k_theta * abs(x[THETA])
    )

    if spec.clamp is not None:
        u = np.clip(u, -spec.clamp, spec.clamp)

    return float(u)


def control_case1(x: State) -> float:
    """
    `u = 20·(β − β₀) + 20·β̇` with `β₀ = tanh(2 − φ̇)`: drive the wheel at `φ̇ = 2` while
    keeping the rod up.
    """

    return control_custom(x, CASE1)


def control_case2(x: State) -> float:
    """
    `u = 5·(β − β₀) + 5·β̇ + 20·|θ|` with `β₀ = 0.2·tanh(10 − φ̇)`: the `|θ|` term accelerates
    the wheel whenever it leans, which limits the precession.
    """

    return control_custom(x, CASE2)


def get_spec(kind: str) -> ControllerSpec:
    try:
        return PRESETS[kind]
    except KeyError:
        raise InvalidControllerError(
            f"'{kind}' is not a preset controller. Choose one of: {', '.join(PRESETS)}."
        )


def with_overrides(spec: ControllerSpec, **overrides) -> ControllerSpec:
    """
    Copy of `spec` with gains replaced. Overriding any gain of a preset turns it into a
    `custom` controller.
    """

    if not overrides:
        return spec

    if spec.kind == "none":
        raise InvalidControllerError(
            "Controller kind 'none' takes no gains, use 'custom' instead"
        )

    allowed = {field.name for field in fields(ControllerSpec)} - {"kind"}
    unknown = set(overrides) - allowed

    if unknown:
        raise InvalidControllerError(
            f"Unknown controller parameter(s): {', '.join(sorted(unknown))}"
        )

    try:
        values = {
            key: (float(value) if value is not None else None)
            for key, value in overrides.items()
        }
    except (TypeError, ValueError) as e:
        raise InvalidControllerError(
            f"Controller parameters must be numbers: {e}"
        ) from e

    return replace(spec, kind="custom", **values)


def make_controller(spec: ControllerSpec) -> Controller:
    """
    Returns the feedback law for `spec` as a function of the state.
    """

    if spec.kind == "none":
        return lambda x: 0.0
    elif spec.kind == "case1" and spec == CASE1:
        return control_case1
    elif spec.kind == "case2" and spec == CASE2:
        return control_case2

    def controller(x: State) -> float:
        return control_custom(x, spec)

    return controller
