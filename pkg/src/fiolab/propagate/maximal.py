"""Maximal functions, convergence profiles and local-smoothing norms over t-grids."""

import logging
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np
import scipy.fft
import scipy.integrate

from fiolab.exponent import LebesgueExponent
from fiolab.lattice.field import Field
from fiolab.lattice.norms import lp_norm, top_shell
from fiolab.lattice.types import ComplexArray, RealArray
from fiolab.symbols.phases import PhaseSpec

from .families import HalfWaveFamily
from .interfaces import TimeFamily
from .models import DEFAULT_TIME_RESOLUTION, ConvergencePoint, MaximalField, TimeGrid

logger = logging.getLogger(__name__)

type ExponentLike = LebesgueExponent | float | str | Fraction


def _slices(
    spectrum: ComplexArray,
    family: TimeFamily,
    field: Field,
    times: RealArray,
    *,
    workers: int,
    max_workers: int,
) -> Iterator[ComplexArray]:
    """Yield T_t f for each t in order, evaluating up to ``max_workers`` at once."""

    def evaluate(t: float) -> ComplexArray:
        symbol = family.symbol(field.grid, float(t))
        return scipy.fft.ifftn(symbol.values * spectrum, workers=workers)

    if max_workers == 1:
        for t in times:
            yield evaluate(t)
        return
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        for start in range(0, times.size, max_workers):
            yield from pool.map(evaluate, times[start : start + max_workers])


def maximal_function(
    field: Field,
    family: TimeFamily,
    times: TimeGrid,
    *,
    time_resolution: float = DEFAULT_TIME_RESOLUTION,
    workers: int = 1,
    max_workers: int = 1,
) -> MaximalField:
    """
    Return sup over sampled t of |T_t f| with the smallest maximizing time.

    Args:
        field: Space-domain field.
        family: Operator family.
        times: Time grid obeying the resolution rule for the field.
        time_resolution: Constant c0 of the resolution rule.
        workers: Worker count handed to ``scipy.fft``.
        max_workers: Number of time slices evaluated concurrently.

    Returns:
        MaximalField: Pointwise maxima and argmax times.

    Raises:
        UnderResolvedTimeGridError: If the grid is too coarse for the field.

    """
    field.require("space")
    shell = top_shell(field, workers)
    times.check_resolution(shell, time_resolution)
    samples = times.samples
    spectrum = scipy.fft.fftn(field.samples, workers=workers)
    values = np.full(field.grid.shape, -1.0)
    argmax = np.zeros(field.grid.shape)
    slices = _slices(
        spectrum,
        family,
        field,
        samples,
        workers=workers,
        max_workers=max_workers,
    )
    for t, evolved in zip(samples, slices, strict=True):
        magnitude = np.abs(evolved)
        larger = magnitude > values
        values = np.where(larger, magnitude, values)
        argmax = np.where(larger, t, argmax)
    logger.debug(
        "maximal function of %s over %s samples on shell k=%s",
        family.label,
        samples.size,
        shell,
    )
    return MaximalField(field.grid, values, argmax)


def convergence_profile(
    field: Field,
    phase: PhaseSpec,
    deltas: Sequence[float],
    p: ExponentLike = "inf",
    *,
    time_resolution: float = DEFAULT_TIME_RESOLUTION,
    workers: int = 1,
) -> list[ConvergencePoint]:
    """
    Return ||sup_{0 < t <= delta} |e^(it phi(D)) f - f| ||_p for each delta.

    Args:
        field: Band-limited space-domain field.
        phase: Phase function.
        deltas: Positive window lengths.
        p: Exponent of the outer norm.
        time_resolution: Constant c0 of the resolution rule.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        list[ConvergencePoint]: One point per delta, in input order.

    """
    field.require("space")
    family = HalfWaveFamily(phase)
    spectrum = scipy.fft.fftn(field.samples, workers=workers)
    shell = top_shell(field, workers)
    profile = []
    for delta in deltas:
        times = TimeGrid.for_shell(shell, 0.0, float(delta), time_resolution)
        supremum = np.zeros(field.grid.shape)
        for t in times.samples[1:]:
            symbol = family.symbol(field.grid, float(t)).values - 1.0
            difference = np.abs(scipy.fft.ifftn(symbol * spectrum, workers=workers))
            supremum = np.maximum(supremum, difference)
        value = lp_norm(Field(field.grid, supremum), p)
        profile.append(ConvergencePoint(float(delta), value, times.count))
    return profile


def local_smoothing_norm(
    field: Field,
    family: TimeFamily,
    times: TimeGrid,
    p: ExponentLike,
    *,
    workers: int = 1,
) -> float:
    """
    Return (int ||T_t f||_p^p dt)^(1/p) by the trapezoid rule over the grid.

    A single-sample grid returns ||T_t f||_p and p = inf returns the largest slice norm.

    Args:
        field: Space-domain field.
        family: Operator family.
        times: Time grid.
        p: Exponent.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        float: Space-time norm.

    """
    exponent = LebesgueExponent.parse(p)
    field.require("space")
    spectrum = scipy.fft.fftn(field.samples, workers=workers)
    samples = times.samples
    norms = np.array(
        [
            lp_norm(Field(field.grid, evolved), exponent)
            for evolved in _slices(
                spectrum,
                family,
                field,
                samples,
                workers=workers,
                max_workers=1,
            )
        ],
    )
    if exponent.is_infinite():
        return float(norms.max())
    if samples.size == 1:
        return float(norms[0])
    power = exponent.as_float()
    integral = float(scipy.integrate.trapezoid(norms**power, samples))
    return integral ** (1.0 / power)
