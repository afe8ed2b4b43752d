import hashlib
import logging
from typing import Union

import numpy as np
import shortuuid


logger = logging.getLogger(__name__)


def generate_checksum(data: Union[str, bytes]) -> str:
    """
    Generates a short, stable checksum for the passed-in data, e.g. a scenario document or an
    exported trajectory.
    """

    if isinstance(data, str):
        data_bytes = str.encode(data)
    else:
        data_bytes = data

    digest = hashlib.sha256(data_bytes).hexdigest()
    checksum = shortuuid.uuid(digest)[:8]

    return checksum


def max_relative_error(actual, expected) -> float:
    """
    Largest absolute discrepancy between two arrays, scaled by the largest magnitude in
    `expected` (never by less than 1 so that near-zero references compare absolutely).
    """

    actual = np.asarray(actual, dtype=float)
    expected = np.asarray(expected, dtype=float)

    if actual.shape != expected.shape:
        raise ValueError(f"Shape mismatch: {actual.shape} != {expected.shape}")

    if actual.size == 0:
        return 0.0

    scale = max(float(np.max(np.abs(expected))), 1.0)

    return float(np.max(np.abs(actual - expected))) / scale
