"""Splitting a radial profile into outgoing and incoming half waves."""

import math
from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike

from fiolab.lattice.types import ComplexArray, RealArray
from fiolab.symbols.bumps import plateau


def split_half_waves(
    profile: Callable[[RealArray], RealArray],
    radii: ArrayLike,
    delta: float = math.pi / 2,
) -> tuple[ComplexArray, ComplexArray]:
    """
    Solve b(r) - a0(r) = e^(ir) a+(r) + e^(-ir) a-(r) pointwise in r.

    The low-frequency part is a0 = Phi * b with the plateau Phi, so the high part
    vanishes for r <= 1. At each radius the pair (a+, a-) is taken constant on
    [r, r + delta] and recovered from the two samples r and r + delta.

    Args:
        profile: Radial profile b.
        radii: Radii r >= 0.
        delta: Sample offset, pi/2 gives the best conditioned solve.

    Returns:
        tuple[ComplexArray, ComplexArray]: Amplitudes (a+, a-) on the radii.

    """
    r = np.asarray(radii, dtype=np.float64)
    shifted = r + delta

    def high(points: RealArray) -> RealArray:
        return (1.0 - plateau(points)) * profile(points)

    near = high(r)
    far = high(shifted)
    determinant = np.exp(-1j * delta) - np.exp(1j * delta)
    outgoing = (near * np.exp(-1j * shifted) - far * np.exp(-1j * r)) / determinant
    incoming = (far * np.exp(1j * r) - near * np.exp(1j * shifted)) / determinant
    return outgoing, incoming
