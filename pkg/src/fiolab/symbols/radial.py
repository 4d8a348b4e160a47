"""Radial Bessel profiles of the spherical, ball and complex means.

Under the angular convention the surface-measure transform is
b(r) = (2 pi)^(n/2) r^(-(n-2)/2) J_((n-2)/2)(r), and the complex mean of order alpha is
m_alpha(r) = pi^(1-alpha) (r / 2 pi)^(-n/2-alpha+1) J_(n/2+alpha-1)(r).
"""

import math

import numpy as np
from numpy.typing import ArrayLike

from fiolab.exceptions import InvalidSymbolError
from fiolab.lattice.types import RealArray
from fiolab.specfun import bessel_j_values, bessel_limit_ratio


def sphere_area(n: int) -> float:
    """
    Return |S^(n-1)| = 2 pi^(n/2) / Gamma(n/2).

    Args:
        n: Spatial dimension.

    Returns:
        float: Surface measure of the unit sphere.

    """
    return 2 * math.pi ** (n / 2) / math.gamma(n / 2)


def ball_volume(n: int) -> float:
    """
    Return |B_1| = pi^(n/2) / Gamma(n/2 + 1).

    Args:
        n: Spatial dimension.

    Returns:
        float: Volume of the unit ball.

    """
    return math.pi ** (n / 2) / math.gamma(n / 2 + 1)


def sphere_ratio(n: int) -> float:
    """
    Return m_0 / (normalized spherical mean) = pi^(n/2) / Gamma(n/2).

    Args:
        n: Spatial dimension.

    Returns:
        float: Normalization constant of the order-zero complex mean.

    """
    return sphere_area(n) / 2


def _scaled_bessel(order: float, radii: ArrayLike) -> RealArray:
    """Return r^(-order) J_order(r), filled with its limit at r = 0."""
    r = np.asarray(radii, dtype=np.float64)
    values = np.full(r.shape, bessel_limit_ratio(order))
    positive = r > 0
    if positive.any():
        values[positive] = bessel_j_values(order, r[positive]) / r[positive] ** order
    return values


def sphere_profile(n: int, radii: ArrayLike, *, normalized: bool = False) -> RealArray:
    """
    Evaluate the surface-measure transform b(r), optionally divided by |S^(n-1)|.

    Args:
        n: Spatial dimension.
        radii: Radii r >= 0.
        normalized: Divide by the sphere area so that b(0) = 1.

    Returns:
        RealArray: Profile values.

    """
    values = (2 * math.pi) ** (n / 2) * _scaled_bessel((n - 2) / 2, radii)
    return values / sphere_area(n) if normalized else values


def complex_mean_profile(n: int, alpha: float | complex, radii: ArrayLike) -> RealArray:
    """
    Evaluate m_alpha(r) for real alpha >= 1 - n/2.

    Args:
        n: Spatial dimension.
        alpha: Real order.
        radii: Radii r >= 0.

    Returns:
        RealArray: Profile values; m_1(0) = |B_1|.

    Raises:
        InvalidSymbolError: If alpha is complex or gives a negative Bessel order.

    """
    if isinstance(alpha, complex):
        if alpha.imag != 0:
            raise InvalidSymbolError.complex_order()
        alpha = alpha.real
    order = n / 2 + alpha - 1
    if order < 0:
        raise InvalidSymbolError.order_too_negative(alpha)
    constant = math.pi ** (1 - alpha) * (2 * math.pi) ** order
    return constant * _scaled_bessel(order, radii)


def ball_average_profile(n: int, radii: ArrayLike) -> RealArray:
    """
    Evaluate the transform of the normalized ball average, m_1(r) / |B_1|.

    Args:
        n: Spatial dimension.
        radii: Radii r >= 0.

    Returns:
        RealArray: Profile values, 1 at r = 0.

    """
    return complex_mean_profile(n, 1.0, radii) / ball_volume(n)
