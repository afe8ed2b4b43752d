"""
Equations of motion: the rolling constraints, the multiplier-augmented mass system
`M(q)·(λ, q̈) = b(q, q̇) + b_u·u` and the state derivative built from its solution.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
import scipy.linalg

from .ad import AD2, cos, sin
from .errors import SingularMassError
from .kinematics import Params
from .lagrangian import lagrangian_partials
from .settings import get_pivot_tolerance, get_residual_tolerance
from .state import THETA, State, split_state


logger = logging.getLogger(__name__)

# Motor torque enters the phi equation with +u and the beta equation with -u; rows follow the
# unknowns (lambda1, lambda2, ddc1, ddc2, ddphi, ddtheta, ddpsi, ddbeta).
B_U = np.array([0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, -1.0])


def constraint_rows(q: Sequence, r: float) -> Tuple[Tuple, Tuple]:
    (_, _, _, theta, psi, _) = q

    s_theta, c_theta = sin(theta), cos(theta)
    s_psi, c_psi = sin(psi), cos(psi)

    return (
        (1.0, 0.0, -r * s_psi, -r * c_psi * c_theta, r * s_psi * s_theta, 0.0),
        (0.0, 1.0, r * c_psi, -r * s_psi * c_theta, -r * c_psi * s_theta, 0.0),
    )


def constraint_matrix(q: Sequence[float], params: Params) -> np.ndarray:
    """
    The 2×6 matrix `A(q)` with `A(q)·q̇ = 0` expressing that the contact point neither slides
    tangentially nor laterally.
    """

    return np.array(constraint_rows(q, params.r), dtype=float)


def constrained_velocities(
    q: Sequence[float], rates: Sequence[float], params: Params
) -> Tuple[float, float]:
    """
    Center rates `(ċ1, ċ2)` implied by rolling without slipping at `rates = (φ̇, θ̇, ψ̇)`.
    """

    (_, _, _, theta, psi, _) = q
    (dphi, dtheta, dpsi) = rates[:3]
    r = params.r

    s_theta, c_theta = np.sin(theta), np.cos(theta)
    s_psi, c_psi = np.sin(psi), np.cos(psi)

    dc1 = r * s_psi * dphi + r * c_psi * c_theta * dtheta - r * s_psi * s_theta * dpsi
    dc2 = -r * c_psi * dphi + r * s_psi * c_theta * dtheta + r * c_psi * s_theta * dpsi

    return (float(dc1), float(dc2))


def full_rates(
    q: Sequence[float], rates: Sequence[float], params: Params
) -> np.ndarray:
    """
    All six generalized rates from the four stored ones `(φ̇, θ̇, ψ̇, β̇)`.
    """

    (dc1, dc2) = constrained_velocities(q, rates, params)

    return np.array([dc1, dc2, *rates[:4]], dtype=float)


def constraint_drift(
    q: Sequence[float], dq: Sequence[float], params: Params
) -> np.ndarray:
    """
    `(∂a/∂q)·q̇` for `a(q, q̇) = A(q)·q̇`, i.e. the velocity-dependent part of `d/dt a`.
    """

    seeded = [AD2(float(value), float(rate)) for (value, rate) in zip(q, dq)]
    rows = constraint_rows(seeded, params.r)
    drift = np.zeros(2)

    for (i, row) in enumerate(rows):
        total = 0.0

        for (coefficient, rate) in zip(row, dq):
            total = total + coefficient * float(rate)

        drift[i] = total.d1 if isinstance(total, AD2) else 0.0

    return drift


def _assemble(
    q: Sequence[float], dq: Sequence[float], params: Params
) -> Tuple[np.ndarray, np.ndarray]:
    partials = lagrangian_partials(q, dq, params)
    A = constraint_matrix(q, params)

    M = np.zeros((8, 8))
    M[:2, 2:] = A
    M[2:, :2] = -A.T
    M[2:, 2:] = partials.hess_dqdq

    b = np.empty(8)
    b[:2] = -constraint_drift(q, dq, params)
    b[2:] = partials.grad_q - partials.hess_dqq @ np.asarray(dq, dtype=float)

    return (M, b)


def mass_matrix(q: Sequence[float], params: Params) -> np.ndarray:
    """
    The 8×8 matrix over the unknowns `(λ1, λ2, c̈1, c̈2, φ̈, θ̈, ψ̈, β̈)`. It depends on `q` only,
    so it is assembled at zero rates.
    """

    (M, _) = _assemble(q, np.zeros(6), params)

    return M


def rhs_vector(
    q: Sequence[float], rates: Sequence[float], params: Params
) -> np.ndarray:
    """
    The right-hand side `b(q, q̇)` for the stored rates `(φ̇, θ̇, ψ̇, β̇)`; the center rates are
    rebuilt from the rolling constraints first.
    """

    (_, b) = _assemble(q, full_rates(q, rates, params), params)

    return b


@dataclass
class AccelSolution:
    """
    Solution `(λ1, λ2, c̈1, c̈2, φ̈, θ̈, ψ̈, β̈)` of the mass system, with the full rates it was
    solved at and the relative residual of the solve.
    """

    values: np.ndarray
    dq: np.ndarray
    residual: float

    @property
    def lambdas(self) -> np.ndarray:
        return self.values[:2]

    @property
    def ddq(self) -> np.ndarray:
        return self.values[2:]

    @property
    def accelerations(self) -> np.ndarray:
        """
        `(φ̈, θ̈, ψ̈, β̈)`, the selection of the last four unknowns.
        """

        return self.values[4:]

    def state_derivative(self) -> np.ndarray:
        return np.concatenate((self.dq, self.accelerations))


def solve_mass_system(M: np.ndarray, rhs: np.ndarray, theta: float = None):
    """
    Dense LU solve with partial pivoting.

    Returns:
        Tuple of the solution and its residual relative to `‖rhs‖`.

    Raises:
        SingularMassError: a pivot below `PIVOT_TOLERANCE·‖M‖` or a residual above
            `RESIDUAL_TOLERANCE`, which happens as the wheel approaches lying flat.
    """

    M_norm = np.linalg.norm(M, np.inf)

    if not np.isfinite(M_norm) or not np.all(np.isfinite(rhs)):
        raise SingularMassError("Mass system has non-finite entries", theta=theta)

    if M_norm == 0.0:
        raise SingularMassError("Mass matrix is zero", theta=theta, pivot=0.0)

    (lu, piv) = scipy.linalg.lu_factor(M, check_finite=False)
    pivot = float(np.min(np.abs(np.diag(lu))))

    if not pivot >= get_pivot_tolerance() * M_norm:
        raise SingularMassError(
            f"Mass matrix is singular (pivot {pivot:.3e}, theta={theta})",
            theta=theta,
            pivot=pivot,
        )

    solution = scipy.linalg.lu_solve((lu, piv), rhs, check_finite=False)
    residual = float(np.linalg.norm(M @ solution - rhs))
    rhs_norm = float(np.linalg.norm(rhs))

    # Backward error, relative to the larger of ‖rhs‖ and ‖M‖·‖v‖
    scale = max(rhs_norm, M_norm * float(np.linalg.norm(solution, np.inf)))

    if not np.all(np.isfinite(solution)) or not np.isfinite(residual):
        raise SingularMassError(
            f"Mass system solution is not finite (theta={theta})",
            theta=theta,
            pivot=pivot,
        )

    if residual > get_residual_tolerance() * scale:
        raise SingularMassError(
            f"Mass system residual {residual:.3e} exceeds tolerance (theta={theta})",
            theta=theta,
            pivot=pivot,
        )

    relative_residual = residual / rhs_norm if rhs_norm > 0 else 0.0

    return (solution, relative_residual)


def solve_accelerations(x: State, u: float, params: Params) -> AccelSolution:
    (q, rates) = split_state(np.asarray(x, dtype=float))
    dq = full_rates(q, rates, params)
    (M, b) = _assemble(q, dq, params)

    (values, residual) = solve_mass_system(M, b + B_U * u, theta=float(q[THETA]))

    return AccelSolution(values=values, dq=dq, residual=residual)


def forward_dynamics(x: State, u: float, params: Params) -> np.ndarray:
    """
    State derivative `ẋ = f(x, u)`: center rates from the rolling constraints, the stored rates,
    then `(φ̈, θ̈, ψ̈, β̈)` from the mass system.
    """

    return solve_accelerations(x, u, params).state_derivative()


def ground_reaction(x: State, u: float, params: Params) -> Tuple[float, float]:
    """
    Multipliers `(λ1, λ2)`; the generalized ground force is `τ = Aᵀ·λ`.
    """

    (lambda1, lambda2) = solve_accelerations(x, u, params).lambdas

    return (float(lambda1), float(lambda2))


def generalized_ground_force(x: State, u: float, params: Params) -> np.ndarray:
    solution = solve_accelerations(x, u, params)

    return constraint_matrix(x[:6], params).T @ solution.lambdas


def constraint_residual(x: State, u: float, params: Params) -> float:
    """
    `‖A(q)·q̈ + (∂a/∂q)·q̇‖` at the solved accelerations.
    """

    solution = solve_accelerations(x, u, params)
    q = np.asarray(x[:6], dtype=float)

    acceleration_level = constraint_matrix(q, params) @ solution.ddq + constraint_drift(
        q, solution.dq, params
    )

    return float(np.linalg.norm(acceleration_level))
