"""Smooth transition profiles shared by every cutoff."""

import numpy as np
from numpy.typing import ArrayLike

from fiolab.lattice.types import RealArray


def smooth_step(u: ArrayLike) -> RealArray:
    """
    Return h(u) = e^(-1/u) / (e^(-1/u) + e^(-1/(1-u))), 0 for u <= 0, 1 for u >= 1.

    Args:
        u: Arguments.

    Returns:
        RealArray: Values in [0, 1], exactly 0 for u <= 0 and exactly 1 for u >= 1.

    """
    clipped = np.clip(np.asarray(u, dtype=np.float64), 0.0, 1.0)
    with np.errstate(divide="ignore", over="ignore"):
        rising = np.where(clipped > 0, np.exp(-1.0 / clipped), 0.0)
        falling = np.where(clipped < 1, np.exp(-1.0 / (1.0 - clipped)), 0.0)
    return rising / (rising + falling)


def plateau(r: ArrayLike) -> RealArray:
    """
    Return 1 - h(r - 1): equal to 1 for r <= 1 and to 0 for r >= 2.

    Args:
        r: Radii.

    Returns:
        RealArray: Plateau profile.

    """
    return 1.0 - smooth_step(np.asarray(r, dtype=np.float64) - 1.0)


def cap_bump(u: ArrayLike) -> RealArray:
    """
    Return 1 - h(2u - 1): equal to 1 for u <= 1/2 and to 0 for u >= 1.

    Args:
        u: Arguments.

    Returns:
        RealArray: Bump profile.

    """
    return 1.0 - smooth_step(2.0 * np.asarray(u, dtype=np.float64) - 1.0)
