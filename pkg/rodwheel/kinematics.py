"""
Euler-angle kinematics of the wheel and rod.

Every function is written with plain arithmetic and `rodwheel.ad.sin/cos`, so it evaluates
on floats as well as on `AD2` hyper-duals. The tuple-returning helpers are the ones used in
the Lagrangian; the array-returning functions are the public surface.
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Tuple

import numpy as np

from .ad import cos, sin


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Params:
    """
    Physical constants of the rodwheel. Defaults are the values of the bundled scenarios.
    """

    m: float = 5.0
    g: float = 9.81
    r: float = 1.0
    mu: float = 1.0
    ell: float = 2.0
    legacy_potential: bool = False

    def __post_init__(self):
        for name in ("m", "g", "r", "mu", "ell"):
            value = getattr(self, name)

            if not np.isfinite(value) or value <= 0:
                raise ValueError(f"'{name}' must be strictly positive, got {value}")

    @property
    def inertia(self) -> Tuple[float, float, float]:
        """
        Diagonal of the disk inertia tensor in the body frame, spin axis first.
        """

        spin = self.m * self.r**2 / 2

        return (spin, spin / 2, spin / 2)


class EulerAngles(NamedTuple):
    phi: float
    theta: float
    psi: float


Matrix3 = Tuple[Tuple, Tuple, Tuple]


def rotation_rows(phi, theta, psi) -> Matrix3:
    """
    Entries of `Rz(psi)·Ry(theta)·Rx(phi)`, row by row.
    """

    s_phi, c_phi = sin(phi), cos(phi)
    s_theta, c_theta = sin(theta), cos(theta)
    s_psi, c_psi = sin(psi), cos(psi)

    return (
        (
            c_psi * c_theta,
            c_psi * s_theta * s_phi - s_psi * c_phi,
            c_psi * s_theta * c_phi + s_psi * s_phi,
        ),
        (
            s_psi * c_theta,
            s_psi * s_theta * s_phi + c_psi * c_phi,
            s_psi * s_theta * c_phi - c_psi * s_phi,
        ),
        (-s_theta, c_theta * s_phi, c_theta * c_phi),
    )


def euler_rotation(angles: Sequence) -> np.ndarray:
    """
    Orientation matrix for the Euler angles `(phi, theta, psi)`.
    """

    (phi, theta, psi) = angles

    return np.array(rotation_rows(phi, theta, psi))


def body_rates(phi, theta, psi, dphi, dtheta, dpsi) -> Tuple:
    """
    Closed form of `unskew(Rᵀ·Ṙ)` for the `Rz·Ry·Rx` convention (it does not depend on psi).
    """

    s_phi, c_phi = sin(phi), cos(phi)
    s_theta, c_theta = sin(theta), cos(theta)

    return (
        dphi - dpsi * s_theta,
        dtheta * c_phi + dpsi * s_phi * c_theta,
        dpsi * c_phi * c_theta - dtheta * s_phi,
    )


def body_angular_velocity(angles: Sequence, rates: Sequence) -> np.ndarray:
    """
    Rotation vector expressed in the body frame for Euler `angles` changing at `rates`.
    """

    return np.array(body_rates(*angles, *rates))


def center_position(q: Sequence, params: Params) -> Tuple:
    (c1, c2, _, theta, _, _) = q

    return (c1, c2, params.r * cos(theta))


def center_velocity(q: Sequence, dq: Sequence, params: Params) -> Tuple:
    theta = q[3]
    (dc1, dc2, _, dtheta, _, _) = dq

    return (dc1, dc2, -params.r * sin(theta) * dtheta)


def wheel_center(q: Sequence, params: Params) -> np.ndarray:
    return np.array(center_position(q, params))


def tip_position(q: Sequence, params: Params) -> Tuple:
    (_, _, _, theta, psi, beta) = q
    rows = rotation_rows(beta, theta, psi)
    center = center_position(q, params)

    return tuple(center[i] + params.ell * rows[i][2] for i in range(3))


def rod_tip(q: Sequence, params: Params) -> np.ndarray:
    """
    End point of the rod: the wheel center plus `euler_rotation(beta, theta, psi)·(0, 0, ell)`.
    """

    return np.array(tip_position(q, params))


def tip_velocity(q: Sequence, dq: Sequence, params: Params) -> Tuple:
    """
    Time derivative of `tip_position` along `dq`, using `Ṙ·e_z = R·(ω × e_z)` with `ω` the body
    rates of the rod frame `(beta, theta, psi)`.
    """

    (_, _, _, theta, psi, beta) = q
    (_, _, _, dtheta, dpsi, dbeta) = dq

    rows = rotation_rows(beta, theta, psi)
    (w1, w2, _) = body_rates(beta, theta, psi, dbeta, dtheta, dpsi)
    center = center_velocity(q, dq, params)
    ell = params.ell

    return tuple(
        center[i] + ell * (w2 * rows[i][0] - w1 * rows[i][1]) for i in range(3)
    )


def tip_height(q: Sequence, params: Params):
    """
    Third component of `rod_tip`, i.e. `(r + ell·cos(beta))·cos(theta)`.
    """

    (_, _, _, theta, _, beta) = q

    return (params.r + params.ell * cos(beta)) * cos(theta)
