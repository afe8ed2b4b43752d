"""
Energies and Lagrangian of the rodwheel, and the exact partial derivatives of the Lagrangian
needed by the equations of motion.

Coordinates are always ordered `(c1, c2, phi, theta, psi, beta)` and rates likewise.
"""

import logging
from typing import NamedTuple, Sequence

import numpy as np

from .ad import AD2
from .kinematics import (
    Params,
    body_rates,
    center_position,
    center_velocity,
    tip_height,
    tip_velocity,
)


logger = logging.getLogger(__name__)


def kinetic_energy(q: Sequence, dq: Sequence, params: Params):
    """
    `½ωᵀIω + ½m‖ċ‖² + ½μ‖ṡ‖²` for the full six rates `dq`; the rolling constraints are not
    applied here.
    """

    (_, _, phi, theta, psi, _) = q
    (_, _, dphi, dtheta, dpsi, _) = dq

    (w1, w2, w3) = body_rates(phi, theta, psi, dphi, dtheta, dpsi)
    (i1, i2, i3) = params.inertia
    rotational = 0.5 * (i1 * w1 * w1 + i2 * w2 * w2 + i3 * w3 * w3)

    (dc1, dc2, dc3) = center_velocity(q, dq, params)
    center = 0.5 * params.m * (dc1 * dc1 + dc2 * dc2 + dc3 * dc3)

    (ds1, ds2, ds3) = tip_velocity(q, dq, params)
    tip = 0.5 * params.mu * (ds1 * ds1 + ds2 * ds2 + ds3 * ds3)

    return rotational + center + tip


def potential_energy(q: Sequence, params: Params):
    """
    Gravitational energy of the disk and the rod mass.

    With `legacy_potential` the rod term is `μ·s3` without gravity, reproducing the historical
    model listing; otherwise it is `μ·g·s3`.
    """

    (_, _, c3) = center_position(q, params)
    s3 = tip_height(q, params)
    rod_weight = params.mu if params.legacy_potential else params.mu * params.g

    return params.m * params.g * c3 + rod_weight * s3


def lagrangian(q: Sequence, dq: Sequence, params: Params):
    return kinetic_energy(q, dq, params) - potential_energy(q, params)


def total_energy(x: Sequence[float], params: Params) -> float:
    """
    Mechanical energy of a 10-dimensional state, with the center rates rebuilt from the
    rolling constraints.
    """

    from .eom import full_rates

    q = x[:6]
    dq = full_rates(q, x[6:], params)

    return float(kinetic_energy(q, dq, params) + potential_energy(q, params))


class LagrangianPartials(NamedTuple):
    grad_q: np.ndarray
    grad_dq: np.ndarray
    hess_dqdq: np.ndarray
    hess_dqq: np.ndarray


# Seed pairs over the inputs z = (q, dq): the first direction always runs over a rate, the
# second over every coordinate plus the rates on or after the first one. That yields the
# rate-rate Hessian (upper triangle), the rate-coordinate block and both gradients.
_PAIRS = [(i, j) for i in range(6, 12) for j in range(12) if j < 6 or j >= i]
_FIRST = np.array([i for (i, _) in _PAIRS])
_SECOND = np.array([j for (_, j) in _PAIRS])
_PAIR_COUNT = len(_PAIRS)

_SEEDS_1 = [
    (_FIRST == k).astype(float) if np.any(_FIRST == k) else 0.0 for k in range(12)
]
_SEEDS_2 = [(_SECOND == k).astype(float) for k in range(12)]

_DIAGONAL = np.array([_PAIRS.index((i, i)) for i in range(6, 12)])
_COORDINATE_COLUMN = np.array([_PAIRS.index((6, j)) for j in range(6)])


def _broadcast(part) -> np.ndarray:
    return np.broadcast_to(np.asarray(part, dtype=float), (_PAIR_COUNT,))


def lagrangian_partials(
    q: Sequence[float], dq: Sequence[float], params: Params
) -> LagrangianPartials:
    """
    Exact `∂L/∂q`, `∂L/∂q̇`, `∂²L/∂q̇²` and `∂²L/∂q̇∂q` from one vectorized hyper-dual
    evaluation of the Lagrangian.

    Returns:
        `hess_dqq[i, j]` is `∂²L/∂q̇_i∂q_j`, so that `d/dt(∂L/∂q̇) = hess_dqdq·q̈ + hess_dqq·q̇`.
    """

    z = [float(value) for value in (*q, *dq)]
    seeded = [AD2(z[k], _SEEDS_1[k], _SEEDS_2[k], 0.0) for k in range(12)]

    value = lagrangian(seeded[:6], seeded[6:], params)

    d1 = _broadcast(value.d1)
    d2 = _broadcast(value.d2)
    d12 = _broadcast(value.d12)

    hessian = np.zeros((6, 12))
    hessian[_FIRST - 6, _SECOND] = d12

    upper = hessian[:, 6:]
    hess_dqdq = np.triu(upper) + np.triu(upper, 1).T

    return LagrangianPartials(
        grad_q=d2[_COORDINATE_COLUMN].copy(),
        grad_dq=d1[_DIAGONAL].copy(),
        hess_dqdq=hess_dqdq,
        hess_dqq=hessian[:, :6].copy(),
    )
