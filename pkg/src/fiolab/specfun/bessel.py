"""Bessel functions of the first kind J_beta for real order beta >= 0 and x >= 0.

Three regimes are used:

* ascending series for x < max(12, beta);
* Hankel large-argument expansion for x >= 12 and beta < 2;
* for x >= max(12, beta) and beta >= 2, the expansion at the two lowest orders
  frac(beta) and frac(beta) + 1 followed by forward recurrence, which is stable
  while the order stays below the argument.
"""

import math

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import gammaln

from fiolab.exceptions import InvalidBesselArgumentError
from fiolab.lattice.types import RealArray

from .models import BesselEval, BesselMethod

SERIES_LIMIT = 12.0
RECURRENCE_ORDER = 2.0
MAX_SERIES_TERMS = 400
MAX_ASYMPTOTIC_TERMS = 60
TERM_FLOOR = 1e-17


def _validate(order: float, argument: float) -> None:
    if not (math.isfinite(order) and math.isfinite(argument)):
        raise InvalidBesselArgumentError.non_finite()
    if order < 0:
        raise InvalidBesselArgumentError.negative_order()
    if argument < 0:
        raise InvalidBesselArgumentError.negative_argument()


def bessel_regime(order: float, argument: float) -> BesselMethod:
    """
    Return the regime used for J_order(argument).

    Args:
        order: Real order >= 0.
        argument: Real argument >= 0.

    Returns:
        BesselMethod: ``series``, ``asymptotic`` or ``recurrence``.

    """
    if argument < max(SERIES_LIMIT, order):
        return "series"
    if order < RECURRENCE_ORDER:
        return "asymptotic"
    return "recurrence"


def bessel_series(order: float, x: ArrayLike) -> RealArray:
    """
    Sum the ascending series sum_m (-1)^m (x/2)^(2m+order) / (m! Gamma(m+order+1)).

    Terms are generated by their ratio, so only the leading power carries a
    Gamma evaluation and the rounding error stays relative to the largest term.

    Args:
        order: Real order >= 0.
        x: Arguments >= 0.

    Returns:
        RealArray: Series values.

    """
    half = np.asarray(x, dtype=np.float64) / 2
    with np.errstate(divide="ignore", invalid="ignore"):
        lead = np.where(
            half > 0,
            np.exp(order * np.log(half) - gammaln(order + 1)),
            1.0 if order == 0 else 0.0,
        )
    square = half * half
    term = lead
    total = lead.copy()
    for m in range(1, MAX_SERIES_TERMS):
        term = -term * square / (m * (m + order))
        total += term
        if np.all(np.abs(term) <= TERM_FLOOR * np.maximum(1.0, np.abs(total))):
            break
    return total


def bessel_asymptotic(order: float, x: ArrayLike) -> RealArray:
    """
    Evaluate the Hankel expansion sqrt(2/(pi x)) (P cos chi - Q sin chi).

    Each argument stops at its own smallest term, or once terms fall below 1e-17.

    Args:
        order: Real order >= 0.
        x: Arguments > 0, accurate for x >= 12 and small order.

    Returns:
        RealArray: Asymptotic values.

    """
    argument = np.asarray(x, dtype=np.float64)
    mu = 4.0 * order * order
    even = np.ones_like(argument)
    odd = np.zeros_like(argument)
    term = np.ones_like(argument)
    active = np.ones(argument.shape, dtype=bool)
    for k in range(1, MAX_ASYMPTOTIC_TERMS):
        candidate = term * (mu - (2 * k - 1) ** 2) / (8.0 * k * argument)
        active &= np.abs(candidate) <= np.abs(term)
        active &= np.abs(term) > TERM_FLOOR
        if not active.any():
            break
        sign = -1.0 if (k // 2) % 2 else 1.0
        contribution = np.where(active, sign * candidate, 0.0)
        if k % 2:
            odd += contribution
        else:
            even += contribution
        term = np.where(active, candidate, term)
    chi = argument - (order / 2 + 0.25) * math.pi
    envelope = np.sqrt(2.0 / (math.pi * argument))
    return envelope * (even * np.cos(chi) - odd * np.sin(chi))


def _forward_recurrence(order: float, x: RealArray) -> RealArray:
    base = order - math.floor(order)
    previous = bessel_asymptotic(base, x)
    current = bessel_asymptotic(base + 1, x)
    nu = base + 1
    for _ in range(round(order - base) - 1):
        previous, current = current, (2 * nu / x) * current - previous
        nu += 1
    return current


def bessel_j_values(order: float, x: ArrayLike) -> RealArray:
    """
    Evaluate J_order on an array of arguments.

    Args:
        order: Real order >= 0.
        x: Arguments >= 0.

    Returns:
        RealArray: Values with the shape of ``x``.

    Raises:
        InvalidBesselArgumentError: On negative or non-finite input.

    """
    argument = np.asarray(x, dtype=np.float64)
    if not math.isfinite(order) or not np.all(np.isfinite(argument)):
        raise InvalidBesselArgumentError.non_finite()
    if order < 0:
        raise InvalidBesselArgumentError.negative_order()
    if np.any(argument < 0):
        raise InvalidBesselArgumentError.negative_argument()

    values = np.empty_like(argument)
    series = argument < max(SERIES_LIMIT, order)
    if series.any():
        values[series] = bessel_series(order, argument[series])
    large = ~series
    if large.any():
        if order < RECURRENCE_ORDER:
            values[large] = bessel_asymptotic(order, argument[large])
        else:
            values[large] = _forward_recurrence(order, argument[large])
    return values


def evaluate_bessel(order: float, x: float) -> BesselEval:
    """
    Evaluate J_order(x) and record the regime used.

    Args:
        order: Real order >= 0.
        x: Argument >= 0.

    Returns:
        BesselEval: Value with its method tag.

    Raises:
        InvalidBesselArgumentError: On negative or non-finite input.

    """
    _validate(order, x)
    value = float(bessel_j_values(order, np.array([x]))[0])
    method = bessel_regime(order, x)
    return BesselEval(order=order, argument=x, value=value, method=method)


def bessel_j(order: float, x: float) -> float:
    """
    Return J_order(x) to about 1e-10 absolute for x <= 1e3 and order <= 10.

    Args:
        order: Real order >= 0.
        x: Argument >= 0.

    Returns:
        float: Bessel function value.

    Raises:
        InvalidBesselArgumentError: On negative or non-finite input.

    """
    return evaluate_bessel(order, x).value


def bessel_limit_ratio(order: float) -> float:
    """
    Return lim_{x->0} J_order(x) / x^order = 1 / (2^order Gamma(order+1)).

    Args:
        order: Real order >= 0.

    Returns:
        float: Limit value used for the xi = 0 bin of radial multipliers.

    Raises:
        InvalidBesselArgumentError: On negative or non-finite order.

    """
    _validate(order, 0.0)
    return math.exp(-order * math.log(2.0) - float(gammaln(order + 1)))
