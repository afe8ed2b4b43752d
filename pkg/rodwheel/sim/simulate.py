import logging
import time
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Optional

import numpy as np

from ..control import NO_CONTROL, ControllerSpec, make_controller
from ..decorators import timed
from ..eom import solve_accelerations
from ..errors import ScenarioValidationError, SingularMassError
from ..kinematics import Params
from ..lagrangian import total_energy
from ..serializer import dumps
from ..settings import get_divergence_tolerance, get_fall_threshold
from ..state import DBETA, DPHI, THETA, as_state
from ..utils import generate_checksum
from .integrator import rk2_step
from .trajectory import (
    FALL_REASON_DIVERGED,
    FALL_REASON_SINGULAR,
    FALL_REASON_THETA,
    FallEvent,
    Sample,
    Trajectory,
)


logger = logging.getLogger(__name__)

DEFAULT_DT = 0.01
DEFAULT_DURATION = 8.0

# Initial state of the uncontrolled run: lean 0.3 rad, rolling at 6 rad/s, rod back at -0.5 rad
FREE_INITIAL_STATE = (4.0, 0.0, 0.0, 0.3, 0.0, -0.5, 6.0, -3.0, 0.0, 0.0)


@dataclass(frozen=True)
class Scenario:
    """
    Everything one simulation needs. Immutable, so sweeps can copy it with `replace` and ship
    it to worker processes.
    """

    name: str = "scenario"
    params: Params = field(default_factory=Params)
    x0: tuple = FREE_INITIAL_STATE
    controller: ControllerSpec = NO_CONTROL
    dt: float = DEFAULT_DT
    duration: float = DEFAULT_DURATION
    output_path: Optional[Path] = None
    sample_stride: int = 1
    audit_energy: bool = True
    audit_constraints: bool = True
    description: str = ""

    def __post_init__(self):
        errors = []

        try:
            object.__setattr__(self, "x0", tuple(float(v) for v in as_state(self.x0)))
        except (TypeError, ValueError) as e:
            errors.append(f"initial_state: {e}")
        else:
            if abs(self.x0[THETA]) >= np.pi / 2:
                errors.append("initial_state: |theta| must be below pi/2")

        if not (np.isfinite(self.dt) and self.dt > 0):
            errors.append(f"dt: must be positive, got {self.dt}")
        elif not (np.isfinite(self.duration) and self.duration >= self.dt):
            errors.append(
                f"duration: must be at least dt ({self.dt}), got {self.duration}"
            )

        if int(self.sample_stride) != self.sample_stride or self.sample_stride < 1:
            errors.append(
                f"sample_stride: must be a positive integer, got {self.sample_stride}"
            )

        if errors:
            raise ScenarioValidationError(
                f"Invalid scenario '{self.name}': {'; '.join(errors)}"
            )

    @property
    def steps(self) -> int:
        # Whole steps within the duration, so the last sample never passes it
        return int(np.floor(self.duration / self.dt + 1e-9))

    def with_changes(self, **changes) -> "Scenario":
        return replace(self, **changes)

    def to_json(self):
        data = {field.name: getattr(self, field.name) for field in fields(self)}
        data["params"] = {
            field.name: getattr(self.params, field.name)
            for field in fields(self.params)
        }
        data["controller"] = self.controller.to_json()

        return data

    def checksum(self) -> str:
        return generate_checksum(dumps(self.to_json()))


def _record(
    traj: Trajectory, t: float, x: np.ndarray, u: float, params: Params, lambdas
) -> None:
    traj.append(
        Sample(
            t=t,
            state=x.copy(),
            u=float(u),
            E=total_energy(x, params),
            lambda1=float(lambdas[0]),
            lambda2=float(lambdas[1]),
        )
    )


def _step_energy_error(
    x: np.ndarray, x_next: np.ndarray, u: float, dt: float, E: float, params: Params
) -> float:
    """
    Energy change over one step minus the trapezoid motor work, relative to `max(|E|, 1)`.
    """

    spin = (x[DPHI] - x[DBETA]) + (x_next[DPHI] - x_next[DBETA])
    motor_work = 0.5 * dt * u * spin
    error = total_energy(x_next, params) - E - motor_work

    return abs(error) / max(abs(E), 1.0)


@timed
def simulate(sc: Scenario) -> Trajectory:
    """
    Integrates the scenario from `t = 0` to its duration with `rk2_step`, evaluating the
    controller once per step.

    Every sample records the state, the held torque, the total energy and the ground-reaction
    multipliers. The run ends early, with `Trajectory.fall` set, when `|θ|` reaches the fall
    threshold, the mass system turns singular, or a step diverges. A diverged step is not
    recorded: its fall event carries the time it would have had.
    """

    params = sc.params
    controller = make_controller(sc.controller)
    threshold = get_fall_threshold()
    divergence_tolerance = get_divergence_tolerance()
    steps = sc.steps

    traj = Trajectory(dt=sc.dt, params=params, scenario_name=sc.name)
    x = np.array(sc.x0, dtype=float)

    logger.info(
        f"Simulating '{sc.name}': {steps} steps of {sc.dt}s "
        f"with controller '{sc.controller.kind}'"
    )
    start = time.perf_counter()

    for k in range(steps + 1):
        t = k * sc.dt
        theta = float(x[THETA])
        u = controller(x)

        try:
            solution = solve_accelerations(x, u, params)
        except SingularMassError as e:
            _record(traj, t, x, u, params, (np.nan, np.nan))
            traj.fall = FallEvent(
                t=t, theta=theta, reason=FALL_REASON_SINGULAR, message=str(e)
            )
            break

        _record(traj, t, x, u, params, solution.lambdas)

        if abs(theta) >= threshold:
            traj.fall = FallEvent(
                t=t,
                theta=theta,
                reason=FALL_REASON_THETA,
                message=f"|theta| reached {abs(theta):.4f} >= {threshold}",
            )
            break

        if k == steps:
            break

        t_next = (k + 1) * sc.dt

        try:
            x_next = rk2_step(x, u, sc.dt, params, k1=solution.state_derivative())
        except SingularMassError as e:
            traj.fall = FallEvent(
                t=t_next, theta=None, reason=FALL_REASON_SINGULAR, message=str(e)
            )
            break

        if not np.all(np.isfinite(x_next)):
            traj.fall = FallEvent(
                t=t_next,
                theta=None,
                reason=FALL_REASON_DIVERGED,
                message="State became non-finite",
            )
            break

        error = _step_energy_error(x, x_next, u, sc.dt, traj.samples[-1].E, params)

        if error > divergence_tolerance:
            traj.fall = FallEvent(
                t=t_next,
                theta=float(x_next[THETA]),
                reason=FALL_REASON_DIVERGED,
                message=f"Step energy error {error:.3g} > {divergence_tolerance}",
            )
            break

        x = x_next

    elapsed = time.perf_counter() - start

    if traj.fall:
        logger.warning(
            f"'{sc.name}' fell at t={traj.fall.t:.3f}s "
            f"({traj.fall.reason}): {traj.fall.message}"
        )
    else:
        logger.info(f"'{sc.name}' completed {len(traj)} samples in {elapsed:.2f}s")

    return traj
