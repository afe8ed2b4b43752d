"""
Post-run checks on a recorded trajectory: energy drift, work balance against the motor
torque, the acceleration-level rolling constraint and the work done by the ground.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..eom import constraint_residual, full_rates, generalized_ground_force
from ..errors import SingularMassError
from ..kinematics import Params
from ..state import DBETA, DPHI, split_state
from .trajectory import Sample, Trajectory


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnergyAudit:
    drift: float
    balance_residual: float
    relative_balance_residual: float

    def to_json(self):
        return {
            "drift": self.drift,
            "balance_residual": self.balance_residual,
            "relative_balance_residual": self.relative_balance_residual,
        }


def _check_not_empty(traj: Trajectory) -> None:
    if len(traj) == 0:
        raise ValueError("Trajectory must not be empty")


def relative_drift(energies: np.ndarray) -> float:
    """
    `max |E(t) − E(0)| / max(|E(0)|, 1)`.
    """

    energies = np.asarray(energies, dtype=float)

    if energies.size < 2:
        return 0.0

    e0 = energies[0]

    return float(np.max(np.abs(energies - e0)) / max(abs(e0), 1.0))


def motor_work(traj: Trajectory) -> np.ndarray:
    """
    Cumulative work of the motor at every sample. The torque `u_k` is held over step `k` and
    the relative spin `φ̇ − β̇` is integrated with the trapezoid rule.
    """

    if len(traj) < 2:
        return np.zeros(len(traj))

    states = traj.states
    relative_spin = states[:, DPHI] - states[:, DBETA]
    steps = np.diff(traj.times)

    step_work = (
        traj.controls[:-1] * 0.5 * (relative_spin[:-1] + relative_spin[1:]) * steps
    )

    return np.concatenate(([0.0], np.cumsum(step_work)))


def audit_energy(traj: Trajectory) -> EnergyAudit:
    """
    Drift of the total energy and the residual of `E(t) − E(0) = ∫u·(φ̇ − β̇)dt`.

    Returns:
        `EnergyAudit` with the relative drift, the largest absolute balance residual and the
        same residual scaled by `max(|E(0)|, 1)`.
    """

    _check_not_empty(traj)

    energies = traj.energies
    e0 = energies[0]

    balance = np.abs(energies - e0 - motor_work(traj))
    balance_residual = float(np.max(balance))

    return EnergyAudit(
        drift=relative_drift(energies),
        balance_residual=balance_residual,
        relative_balance_residual=balance_residual / max(abs(e0), 1.0),
    )


def _worst_over_samples(
    traj: Trajectory, params: Optional[Params], check: Callable[..., float]
) -> float:
    """
    Largest value of `check(sample, params)` over the samples. Samples whose mass system is
    singular are skipped.
    """

    _check_not_empty(traj)
    params = params or traj.params
    worst = 0.0

    for sample in traj.samples:
        try:
            value = check(sample, params)
        except SingularMassError:
            logger.debug(f"Skipping singular sample at t={sample.t}")
            continue

        worst = max(worst, value)

    return worst


def audit_constraints(traj: Trajectory, params: Params = None) -> float:
    """
    Largest `‖A(q)·q̈ + (∂a/∂q)·q̇‖` over the samples, with `q̈` re-solved at each sample.
    """

    return _worst_over_samples(
        traj,
        params,
        lambda sample, params: constraint_residual(sample.state, sample.u, params),
    )


def _ground_power(sample: Sample, params: Params) -> float:
    tau = generalized_ground_force(sample.state, sample.u, params)
    (q, rates) = split_state(sample.state)

    return abs(float(tau @ full_rates(q, rates, params)))


def audit_ground_work(traj: Trajectory, params: Params = None) -> float:
    """
    Largest power `|τᵀ·q̇|` of the generalized ground force `τ = Aᵀ·λ`, which vanishes because
    the constraint forces do no work.
    """

    return _worst_over_samples(traj, params, _ground_power)



@dataclass(frozen=True)
class TrajectorySummary:
    scenario: str
    samples: int
    fell: bool
    t_fall: Optional[float]
    fall_reason: Optional[str]
    final_time: float
    final_dphi: float
    max_abs_theta: float
    energy_drift: float
    final_state: tuple
    checksum: str

    def to_json(self):
        return dict(self.__dict__)


def summarize(traj: Trajectory) -> TrajectorySummary:
    _check_not_empty(traj)

    final_state = traj.final_state

    return TrajectorySummary(
        scenario=traj.scenario_name,
        samples=len(traj),
        fell=traj.fell,
        t_fall=traj.fall.t if traj.fall else None,
        fall_reason=traj.fall.reason if traj.fall else None,
        final_time=traj.samples[-1].t,
        final_dphi=float(final_state[DPHI]),
        max_abs_theta=traj.max_abs_theta(),
        energy_drift=relative_drift(traj.energies),
        final_state=tuple(float(value) for value in final_state),
        checksum=traj.checksum(),
    )
