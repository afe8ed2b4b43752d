"""
Recorded simulation output and its CSV interchange format.
"""

import csv
import io
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Union

import numpy as np

from ..kinematics import Params
from ..state import STATE_FIELDS, THETA
from ..utils import generate_checksum


logger = logging.getLogger(__name__)

CSV_COLUMNS = ("t", *STATE_FIELDS, "u", "E", "lambda1", "lambda2")

FALL_REASON_THETA = "theta"
FALL_REASON_SINGULAR = "singular"
FALL_REASON_DIVERGED = "diverged"


@dataclass(frozen=True)
class Sample:
    t: float
    state: np.ndarray
    u: float
    E: float
    lambda1: float
    lambda2: float

    def as_row(self) -> List[float]:
        return [self.t, *self.state, self.u, self.E, self.lambda1, self.lambda2]


@dataclass(frozen=True)
class FallEvent:
    """
    Why and when a run stopped before its horizon. Not an exception: the samples up to the fall
    are still a valid trajectory.
    """

    t: float
    theta: Optional[float]
    reason: str
    message: str = ""

    def to_json(self):
        return {
            "t": self.t,
            "theta": self.theta,
            "reason": self.reason,
            "message": self.message,
        }


@dataclass
class Trajectory:
    dt: float
    params: Params = field(default_factory=Params)
    samples: List[Sample] = field(default_factory=list)
    fall: Optional[FallEvent] = None
    scenario_name: str = ""

    def __len__(self):
        return len(self.samples)

    def append(self, sample: Sample) -> None:
        if self.samples:
            if not sample.t > self.samples[-1].t:
                raise ValueError("Timestamps must increase")

        self.samples.append(sample)

    @property
    def fell(self) -> bool:
        return self.fall is not None

    @property
    def times(self) -> np.ndarray:
        return np.array([sample.t for sample in self.samples])

    @property
    def states(self) -> np.ndarray:
        return np.array([sample.state for sample in self.samples]).reshape(
            -1, len(STATE_FIELDS)
        )

    @property
    def controls(self) -> np.ndarray:
        return np.array([sample.u for sample in self.samples])

    @property
    def energies(self) -> np.ndarray:
        return np.array([sample.E for sample in self.samples])

    @property
    def lambdas(self) -> np.ndarray:
        return np.array(
            [(sample.lambda1, sample.lambda2) for sample in self.samples]
        ).reshape(-1, 2)

    @property
    def final_state(self) -> np.ndarray:
        return self.samples[-1].state

    def max_abs_theta(self, since: float = 0.0) -> float:
        """
        Largest `|θ|` over the samples at `t >= since`, or 0 when there are none.
        """

        if not self.samples:
            return 0.0

        window = np.abs(self.states[self.times >= since, THETA])

        return float(window.max()) if window.size else 0.0

    def to_csv(self, sample_stride: int = 1) -> str:
        return write_trajectory_csv(self, io.StringIO(), sample_stride=sample_stride)

    def checksum(self) -> str:
        return generate_checksum(self.to_csv())


def _format(value: float) -> str:
    # `repr` of a float is the shortest string that round-trips, always with a dot decimal
    return repr(float(value))


def _strided(samples: List[Sample], sample_stride: int) -> List[Sample]:
    if sample_stride < 1:
        raise ValueError("sample_stride must be at least 1")

    selected = samples[::sample_stride]

    # The terminal sample is always exported
    if samples and selected[-1] is not samples[-1]:
        selected.append(samples[-1])

    return selected


def write_trajectory_csv(
    traj: Trajectory,
    output: Union[str, Path, io.TextIOBase],
    sample_stride: int = 1,
) -> str:
    """
    Writes one row per recorded sample, thinned by `sample_stride`.

    Args:
        param output: A path or an open text stream.

    Returns:
        The CSV text.
    """

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)

    for sample in _strided(traj.samples, sample_stride):
        writer.writerow([_format(value) for value in sample.as_row()])

    text = buffer.getvalue()

    if isinstance(output, (str, Path)):
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)

        logger.debug(f"Wrote {len(traj)} samples to {path}")
    else:
        output.write(text)

    return text


def read_trajectory_csv(
    source: Union[str, Path, io.TextIOBase], dt: Optional[float] = None
) -> Trajectory:
    """
    Parses CSV written by `write_trajectory_csv`. Values come back bit-identical.

    Raises:
        ValueError: the header does not match the trajectory columns.
    """

    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8", newline="") as f:
            text = f.read()
    else:
        text = source.read()

    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader, ()))

    if header != CSV_COLUMNS:
        raise ValueError(f"Unexpected trajectory header: {','.join(header)}")

    samples = []

    for row in reader:
        if not row:
            continue

        values = [float(value) for value in row]
        samples.append(
            Sample(
                t=values[0],
                state=np.array(values[1:11]),
                u=values[11],
                E=values[12],
                lambda1=values[13],
                lambda2=values[14],
            )
        )

    if dt is None:
        dt = samples[1].t - samples[0].t if len(samples) > 1 else 0.0

    return Trajectory(dt=dt, samples=samples)
