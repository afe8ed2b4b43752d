import logging
from typing import Callable, Optional

import numpy as np

from ..eom import forward_dynamics
from ..kinematics import Params
from ..state import State


logger = logging.getLogger(__name__)

VectorField = Callable[[State, float], np.ndarray]


def rk2_step(
    x: State,
    u: float,
    dt: float,
    params: Params,
    f: Optional[VectorField] = None,
    k1: Optional[np.ndarray] = None,
) -> State:
    """
    One step of Ralston's two-stage scheme `x + dt·(¼·k1 + ¾·k2)` with
    `k2 = f(x + ⅔·dt·k1, u)`. The torque `u` is held over the whole step.

    Args:
        param f: Vector field `f(x, u)`. Defaults to `forward_dynamics` with `params`.
        param k1: Already evaluated `f(x, u)`, to avoid solving the mass system twice at `x`.

    Raises:
        SingularMassError: from either stage.
    """

    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")

    if f is None:

        def f(state, torque):
            return forward_dynamics(state, torque, params)

    x = np.asarray(x, dtype=float)

    if k1 is None:
        k1 = f(x, u)

    k2 = f(x + (2.0 / 3.0) * dt * k1, u)

    return x + dt * (0.25 * k1 + 0.75 * k2)
