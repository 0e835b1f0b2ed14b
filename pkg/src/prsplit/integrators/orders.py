"""Observed convergence orders."""

from typing import Sequence

import numpy as np

from ..errors import DegenerateMeasurementError, InvalidArgumentError


def observed_orders(hs: Sequence[float], errors: Sequence[float]) -> list[float]:
    """Pairwise slopes log(e_i / e_{i+1}) / log(h_i / h_{i+1})."""
    if len(hs) != len(errors) or len(hs) < 2:
        raise InvalidArgumentError("need at least two (h, error) pairs of equal length")

    h = np.asarray(hs, dtype=np.float64)
    e = np.asarray(errors, dtype=np.float64)
    if np.any(h <= 0):
        raise InvalidArgumentError("step sizes must be positive")
    if np.any(np.diff(h) >= 0):
        raise InvalidArgumentError("step sizes must be strictly decreasing")
    if not np.all(np.isfinite(e)) or np.any(e <= 0):
        raise DegenerateMeasurementError(f"errors must be positive and finite, got {list(e)}")

    return [float(x) for x in np.log(e[:-1] / e[1:]) / np.log(h[:-1] / h[1:])]
