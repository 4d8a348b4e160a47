"""Envelope psi of the Knapp packets, given through its spectrum."""

import math

import numpy as np
from numpy.typing import ArrayLike
from scipy.integrate import quad

from fiolab.lattice.types import RealArray
from fiolab.symbols.bumps import smooth_step
from fiolab.symbols.radial import sphere_area


def envelope_spectrum(eta_squared: ArrayLike, c: float) -> RealArray:
    """
    Return psi_hat(eta) = h(1 - |eta|^2 / c^2) from |eta|^2.

    The profile is radial, nonnegative, equal to 1 at the origin and supported
    in |eta| <= c, so psi is real and even.

    Args:
        eta_squared: Values of |eta|^2.
        c: Support radius.

    Returns:
        RealArray: Envelope spectrum.

    """
    return smooth_step(1.0 - np.asarray(eta_squared, dtype=np.float64) / c**2)


def envelope_l1(n: int, c: float) -> float:
    """
    Return ||psi_hat||_1 in dimension n.

    Args:
        n: Spatial dimension.
        c: Support radius.

    Returns:
        float: pi c^2 / 2 for n = 2, a radial quadrature otherwise.

    """
    if n == 2:  # noqa: PLR2004
        return math.pi * c**2 / 2
    value, _ = quad(
        lambda r: float(envelope_spectrum(r * r, c)) * r ** (n - 1),
        0.0,
        c,
        epsabs=0.0,
        epsrel=1e-12,
    )
    return sphere_area(n) * value


def envelope_peak(n: int, c: float) -> float:
    """
    Return psi(0) = (2 pi)^-n ||psi_hat||_1, the largest value of |psi|.

    Args:
        n: Spatial dimension.
        c: Support radius.

    Returns:
        float: Peak of the envelope.

    """
    return envelope_l1(n, c) / (2 * math.pi) ** n
