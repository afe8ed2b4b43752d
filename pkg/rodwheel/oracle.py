"""
Brute-force validators for the dynamics engine.

Nothing here reuses the hyper-dual code paths: the Lagrangian is a literal closed-form
expression, derivatives are finite differences and the constraint rows are written out again.
A bug shared between the engine and the oracle therefore cannot validate itself.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .kinematics import Params
from .settings import get_audit_settings, get_fd_settings
from .utils import max_relative_error


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FDConfig:
    h: float = 1e-5
    scheme: str = "central"
    tolerance: float = 1e-6

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError(f"h must be positive, got {self.h}")

        if self.scheme != "central":
            raise ValueError("Only central differences are supported")

    @classmethod
    def from_settings(cls) -> "FDConfig":
        fd_settings = get_fd_settings()

        return cls(h=fd_settings["STEP"], tolerance=fd_settings["TOLERANCE"])


def paper_lagrangian_closed_form(
    q: Sequence[float],
    dq: Sequence[float],
    params: Params,
    legacy: Optional[bool] = None,
) -> float:
    """
    The fully expanded Lagrangian of the rodwheel, term by term.

    Args:
        param legacy: Drop `g` from the rod potential. Defaults to `params.legacy_potential`.
    """

    if legacy is None:
        legacy = params.legacy_potential

    (_, _, phi, theta, psi, beta) = (float(v) for v in q)
    (dc1, dc2, dphi, dtheta, dpsi, dbeta) = (float(v) for v in dq)
    (m, g, r, mu, ell) = (params.m, params.g, params.r, params.mu, params.ell)

    sphi, cphi = math.sin(phi), math.cos(phi)
    stheta, ctheta = math.sin(theta), math.cos(theta)
    spsi, cpsi = math.sin(psi), math.cos(psi)
    sbeta, cbeta = math.sin(beta), math.cos(beta)

    rod_weight = mu if legacy else mu * g

    return (
        m / 8 * r**2 * (dtheta * sphi - dpsi * ctheta * cphi) ** 2
        + m / 8 * r**2 * (dtheta * cphi + dpsi * sphi * ctheta) ** 2
        + m / 4 * r**2 * (dphi - dpsi * stheta) ** 2
        + m / 2 * (r**2 * dtheta**2 * stheta**2 + dc1**2 + dc2**2)
        - rod_weight * (ell * cbeta + r) * ctheta
        + mu
        / 2
        * (
            ell * spsi * cbeta * ctheta * dtheta
            + ell * (sbeta * spsi + stheta * cbeta * cpsi) * dpsi
            - ell * (sbeta * stheta * spsi + cbeta * cpsi) * dbeta
            + dc2
        )
        ** 2
        + mu
        / 2
        * (
            ell * cbeta * ctheta * cpsi * dtheta
            + ell * (sbeta * cpsi - stheta * spsi * cbeta) * dpsi
            + ell * (spsi * cbeta - sbeta * stheta * cpsi) * dbeta
            + dc1
        )
        ** 2
        + mu
        / 2
        * (ell * sbeta * ctheta * dbeta + (ell * stheta * cbeta + r * stheta) * dtheta)
        ** 2
        - g * m * r * ctheta
    )


def fd_gradient(
    fn: Callable[[np.ndarray], float], point: Sequence[float], cfg: FDConfig = None
) -> np.ndarray:
    """
    Central differences `(fn(x + h·eᵢ) − fn(x − h·eᵢ)) / 2h` for every component.
    """

    cfg = cfg or FDConfig()
    x = np.array(point, dtype=float)
    gradient = np.zeros(x.size)

    for i in range(x.size):
        forward = x.copy()
        backward = x.copy()
        forward[i] += cfg.h
        backward[i] -= cfg.h
        gradient[i] = (fn(forward) - fn(backward)) / (2 * cfg.h)

    return gradient


def _constraint_rows(q: Sequence[float], r: float) -> np.ndarray:
    theta, psi = q[3], q[4]

    return np.array(
        [
            [
                1.0,
                0.0,
                -r * math.sin(psi),
                -r * math.cos(psi) * math.cos(theta),
                r * math.sin(psi) * math.sin(theta),
                0.0,
            ],
            [
                0.0,
                1.0,
                r * math.cos(psi),
                -r * math.sin(psi) * math.cos(theta),
                -r * math.cos(psi) * math.sin(theta),
                0.0,
            ],
        ]
    )


def _center_rates(q: Sequence[float], rates: Sequence[float], r: float) -> np.ndarray:
    # The first two rows of A·q̇ = 0 solve directly for (ċ1, ċ2)
    A = _constraint_rows(q, r)
    reduced = np.array([0.0, 0.0, *rates])

    return -(A @ reduced)[:2]


def _full_rates(q: Sequence[float], dq: Sequence[float], params: Params) -> np.ndarray:
    dq = np.asarray(dq, dtype=float)

    if dq.size == 4:
        return np.concatenate((_center_rates(q, dq, params.r), dq))

    if dq.size != 6:
        raise ValueError("Rates are either the 4 stored ones or all 6")

    return dq


def _momentum(lagrangian: Callable, q: np.ndarray, dq: np.ndarray) -> np.ndarray:
    # L is a quadratic form in the rates, so unit steps give ∂L/∂q̇ without truncation error
    momentum = np.zeros(6)

    for i in range(6):
        step = np.zeros(6)
        step[i] = 1.0
        momentum[i] = (lagrangian(q, dq + step) - lagrangian(q, dq - step)) / 2

    return momentum


def _residual_map(
    q: np.ndarray, dq: np.ndarray, params: Params, cfg: FDConfig
) -> Callable[[np.ndarray], np.ndarray]:
    """
    `S(λ, q̈)`: the constraint rows at acceleration level stacked on the Euler-Lagrange rows,
    `S = 0` being the equations of motion at zero torque.
    """

    h = cfg.h

    def lagrangian(q_, dq_):
        return paper_lagrangian_closed_form(q_, dq_, params)

    grad_q = fd_gradient(lambda z: lagrangian(z, dq), q, cfg)
    A = _constraint_rows(q, params.r)
    A_drift = (
        _constraint_rows(q + h * dq, params.r) - _constraint_rows(q - h * dq, params.r)
    ) / (2 * h)

    def S(unknowns: np.ndarray) -> np.ndarray:
        lambdas = unknowns[:2]
        ddq = unknowns[2:]

        ahead = _momentum(lagrangian, q + h * dq, dq + h * ddq)
        behind = _momentum(lagrangian, q - h * dq, dq - h * ddq)
        momentum_rate = (ahead - behind) / (2 * h)

        top = A @ ddq + A_drift @ dq
        bottom = momentum_rate - grad_q - A.T @ lambdas

        return np.concatenate((top, bottom))

    return S


def fd_mass_and_rhs(
    q: Sequence[float],
    dq: Sequence[float],
    params: Params,
    cfg: FDConfig = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Assembles `M` and `b` by evaluating the affine map `S(q, q̇, ·)`: column `j` of `M` is
    `S(eⱼ) − S(0)` and `b = −S(0)`, with `d/dt(∂L/∂q̇)` taken by finite differences along the
    flow.

    Args:
        param dq: The four stored rates (center rates are rebuilt from the rolling constraints)
            or all six.
    """

    cfg = cfg or FDConfig()
    q = np.asarray(q, dtype=float)
    dq = _full_rates(q, dq, params)

    S = _residual_map(q, dq, params, cfg)
    at_zero = S(np.zeros(8))

    M = np.zeros((8, 8))

    for j in range(8):
        seed = np.zeros(8)
        seed[j] = 1.0
        M[:, j] = S(seed) - at_zero

    return (M, -at_zero)


class FDPartials(NamedTuple):
    grad_q: np.ndarray
    grad_dq: np.ndarray
    hess_dqdq: np.ndarray
    hess_dqq: np.ndarray


def fd_lagrangian_partials(
    fn: Callable[[np.ndarray, np.ndarray], float],
    q: Sequence[float],
    dq: Sequence[float],
    cfg: FDConfig = None,
) -> FDPartials:
    """
    Finite-difference versions of the four blocks of Lagrangian partials for any `fn(q, dq)`
    quadratic in `dq`.
    """

    cfg = cfg or FDConfig()
    q = np.asarray(q, dtype=float)
    dq = np.asarray(dq, dtype=float)

    grad_q = fd_gradient(lambda z: fn(z, dq), q, cfg)
    grad_dq = _momentum(fn, q, dq)

    hess_dqdq = np.zeros((6, 6))

    for j in range(6):
        step = np.zeros(6)
        step[j] = 1.0
        hess_dqdq[:, j] = (
            _momentum(fn, q, dq + step) - _momentum(fn, q, dq - step)
        ) / 2

    hess_dqq = np.zeros((6, 6))

    for j in range(6):
        step = np.zeros(6)
        step[j] = cfg.h
        hess_dqq[:, j] = (_momentum(fn, q + step, dq) - _momentum(fn, q - step, dq)) / (
            2 * cfg.h
        )

    return FDPartials(grad_q, grad_dq, hess_dqdq, hess_dqq)


def random_states(
    count: int, seed: int = None, max_theta: float = None
) -> np.ndarray:
    """
    Seeded random 10-dimensional states with `|θ| ≤ max_theta`, angles over a full turn and
    rates within ±3 rad/s.
    """

    audit_settings = get_audit_settings()
    seed = audit_settings["SEED"] if seed is None else seed
    max_theta = audit_settings["MAX_THETA"] if max_theta is None else max_theta

    rng = np.random.default_rng(seed)
    states = np.empty((count, 10))

    states[:, 0:2] = rng.uniform(-5.0, 5.0, size=(count, 2))
    states[:, 2] = rng.uniform(-math.pi, math.pi, size=count)
    states[:, 3] = rng.uniform(-max_theta, max_theta, size=count)
    states[:, 4:6] = rng.uniform(-math.pi, math.pi, size=(count, 2))
    states[:, 6:10] = rng.uniform(-3.0, 3.0, size=(count, 4))

    return states


class StateAudit(NamedTuple):
    mass_error: float
    rhs_error: float

    @property
    def worst(self) -> float:
        return max(self.mass_error, self.rhs_error)


def audit_state(
    x: Sequence[float], params: Params, cfg: FDConfig = None
) -> StateAudit:
    """
    Relative discrepancy between the engine's `mass_matrix`/`rhs_vector` and the oracle at one
    state.
    """

    from .eom import mass_matrix, rhs_vector

    x = np.asarray(x, dtype=float)
    (M_fd, b_fd) = fd_mass_and_rhs(x[:6], x[6:], params, cfg)

    return StateAudit(
        mass_error=max_relative_error(mass_matrix(x[:6], params), M_fd),
        rhs_error=max_relative_error(rhs_vector(x[:6], x[6:], params), b_fd),
    )
