"""Least-squares fits of log2-scaling laws."""

from collections.abc import Sequence
from typing import NamedTuple

import numpy as np

from fiolab.exceptions import FitError

MIN_FIT_ROWS = 4


class SlopeFit(NamedTuple):
    """Fitted line log2 value = slope * abscissa + intercept."""

    slope: float
    intercept: float
    max_residual: float


def fit_slope(rows: Sequence[tuple[float, float]]) -> SlopeFit:
    """
    Fit log2 of the values against the abscissae by least squares.

    Args:
        rows: ``(abscissa, value)`` pairs, normally ``(k, ratio)``.

    Returns:
        SlopeFit: Slope, intercept and the largest deviation from the line.

    Raises:
        FitError: If fewer than four rows are given or a value is not positive.

    """
    if len(rows) < MIN_FIT_ROWS:
        raise FitError.too_few_rows(len(rows))
    abscissae = np.array([float(x) for x, _ in rows])
    values = np.array([float(v) for _, v in rows])
    if not np.all(np.isfinite(values)) or np.any(values <= 0):
        raise FitError.nonpositive_value()
    logs = np.log2(values)
    design = np.column_stack([abscissae, np.ones_like(abscissae)])
    (slope, intercept), *_ = np.linalg.lstsq(design, logs, rcond=None)
    residual = np.abs(logs - (slope * abscissae + intercept)).max()
    return SlopeFit(float(slope), float(intercept), float(residual))
