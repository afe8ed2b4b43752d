"""
Layout of the 10-dimensional rodwheel state `(c1, c2, phi, theta, psi, beta, dphi, dtheta,
dpsi, dbeta)`. The center rates are not stored: the rolling constraints determine them.
"""

from typing import Sequence, Tuple

import numpy as np


STATE_FIELDS = (
    "c1",
    "c2",
    "phi",
    "theta",
    "psi",
    "beta",
    "dphi",
    "dtheta",
    "dpsi",
    "dbeta",
)

(C1, C2, PHI, THETA, PSI, BETA, DPHI, DTHETA, DPSI, DBETA) = range(10)


State = np.ndarray


def as_state(values: Sequence[float]) -> State:
    """
    Copies `values` into a fresh float state vector.

    Raises:
        ValueError: wrong length or non-finite entries.
    """

    x = np.array(values, dtype=float).reshape(-1)

    if x.shape != (len(STATE_FIELDS),):
        raise ValueError(
            f"A state has exactly {len(STATE_FIELDS)} components, got {x.size}"
        )

    if not np.all(np.isfinite(x)):
        raise ValueError("State components must be finite")

    return x


def split_state(x: State) -> Tuple[np.ndarray, np.ndarray]:
    """
    Returns the generalized coordinates `q` (6) and the stored rates `(dphi, dtheta, dpsi, dbeta)`.
    """

    return (x[:6], x[6:])
