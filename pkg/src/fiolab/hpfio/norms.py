"""Sobolev norms and the two estimators of the H^(s,p)_FIO norm."""

import logging
import math
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np
import scipy.fft

from fiolab.exceptions import (
    InvalidExponentError,
    SupportViolationError,
    UnderResolvedFrameError,
)
from fiolab.exponent import LebesgueExponent
from fiolab.lattice.field import Field
from fiolab.lattice.grid import frequency_axes, frequency_norm, nyquist_mask
from fiolab.lattice.norms import energy_outside, lp_norm, top_shell
from fiolab.lattice.types import ComplexArray, RealArray
from fiolab.symbols.bumps import plateau
from fiolab.symbols.multipliers import bessel_potential, shell_mask

from .cutoffs import conic_family, frame_cutoffs
from .frame import build_frame, direction_quadrature
from .models import DirectionFrame, DirectionQuadrature

logger = logging.getLogger(__name__)

type ExponentLike = LebesgueExponent | float | str | Fraction

DEFAULT_OVERSAMPLING = 4.0
MIN_OVERSAMPLING = 2.0
DEFAULT_SUPPORT_TOLERANCE = 1e-8


def _open_range(p: ExponentLike) -> LebesgueExponent:
    exponent = LebesgueExponent.parse(p)
    if exponent.is_infinite() or exponent.as_float() <= 1:
        raise InvalidExponentError.open_range_required()
    return exponent


def _power_sum(
    term: Callable[[int], float],
    count: int,
    max_workers: int,
) -> float:
    """Evaluate term(0..count-1) and add them in index order."""
    if max_workers == 1:
        return math.fsum(term(index) for index in range(count))
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return math.fsum(pool.map(term, range(count)))


def _filtered_norm(
    grid_field: Field,
    spectrum: ComplexArray,
    symbol: RealArray,
    exponent: LebesgueExponent,
    workers: int,
) -> float:
    samples = scipy.fft.ifftn(symbol * spectrum, workers=workers)
    return lp_norm(Field(grid_field.grid, samples), exponent)


def sobolev_norm(field: Field, s: float, p: ExponentLike, workers: int = 1) -> float:
    """
    Return ||<D>^s f||_p for 1 < p < inf.

    Args:
        field: Space-domain field.
        s: Smoothness index.
        p: Exponent in (1, inf).
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        float: Bessel-potential Sobolev norm.

    Raises:
        InvalidExponentError: If p is outside (1, inf).

    """
    exponent = _open_range(p)
    field.require("space")
    spectrum = scipy.fft.fftn(field.samples, workers=workers)
    weight = bessel_potential(field.grid, s)
    return _filtered_norm(field, spectrum, weight, exponent, workers)


def sup_norm_proxy(field: Field, s: float, workers: int = 1) -> float:
    """
    Return max |<D>^s f|, the stand-in used at p = inf.

    Args:
        field: Space-domain field.
        s: Smoothness index.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        float: Sup norm of the Bessel potential.

    """
    field.require("space")
    spectrum = scipy.fft.fftn(field.samples, workers=workers)
    return _filtered_norm(
        field,
        spectrum,
        bessel_potential(field.grid, s),
        LebesgueExponent.infinity(),
        workers,
    )


def quadrature_for(
    field: Field,
    oversampling: float = DEFAULT_OVERSAMPLING,
    workers: int = 1,
) -> DirectionQuadrature:
    """
    Build the omega-quadrature with spacing 2^(-k_max/2) / oversampling.

    Args:
        field: Field whose top shell sets the resolution.
        oversampling: Refinement factor, at least 2.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        DirectionQuadrature: Quadrature rule.

    """
    shell = max(top_shell(field, workers), 1)
    return direction_quadrature(field.grid.dim, 2.0 ** (-shell / 2) / oversampling)


def hpfio_norm_quadrature(
    field: Field,
    s: float,
    p: ExponentLike,
    *,
    quadrature: DirectionQuadrature | None = None,
    oversampling: float = DEFAULT_OVERSAMPLING,
    workers: int = 1,
    max_workers: int = 1,
) -> float:
    """
    Return ||q(D)<D>^s f||_p + (sum_omega w ||phi_omega(D)<D>^s f||_p^p)^(1/p).

    Args:
        field: Band-limited space-domain field.
        s: Smoothness index.
        p: Exponent in (1, inf).
        quadrature: Omega-quadrature; built from the field's top shell when omitted.
        oversampling: Refinement factor of the default quadrature.
        workers: Worker count handed to ``scipy.fft``.
        max_workers: Number of directions evaluated concurrently.

    Returns:
        float: Quadrature estimate of the H^(s,p)_FIO norm.

    Raises:
        InvalidExponentError: If p is outside (1, inf).
        UnderResolvedFrameError: If the quadrature is too coarse for the field.

    """
    exponent = _open_range(p)
    field.require("space")
    grid = field.grid
    shell = max(top_shell(field, workers), 1)
    limit = 2.0 ** (-shell / 2) / MIN_OVERSAMPLING
    rule = (
        quadrature
        if quadrature is not None
        else quadrature_for(field, oversampling, workers)
    )
    if rule.spacing > limit:
        raise UnderResolvedFrameError.spacing_too_coarse(rule.spacing, limit)
    spectrum = scipy.fft.fftn(field.samples, workers=workers)
    spectrum *= bessel_potential(grid, s)
    low = _filtered_norm(
        field,
        spectrum,
        plateau(frequency_norm(grid) / 2.0),
        exponent,
        workers,
    )
    family = conic_family(frequency_axes(grid), rule)
    keep = ~nyquist_mask(grid)
    power = exponent.as_float()

    def term(index: int) -> float:
        symbol = np.where(keep, family.value(index), 0.0)
        norm = _filtered_norm(field, spectrum, symbol, exponent, workers)
        return float(rule.weights[index]) * norm**power

    total = _power_sum(term, rule.count, max_workers)
    logger.debug("quadrature estimator over %s directions", rule.count)
    return low + total ** (1.0 / power)


def check_shell_support(
    field: Field,
    k: int,
    tolerance: float = DEFAULT_SUPPORT_TOLERANCE,
    workers: int = 1,
) -> float:
    """
    Return the spectral energy fraction outside shell k, refusing fields that leak.

    Args:
        field: Space-domain field.
        k: Shell index.
        tolerance: Largest admissible fraction.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        float: Energy fraction outside the shell.

    Raises:
        SupportViolationError: If the fraction exceeds the tolerance.

    """
    fraction = energy_outside(field, shell_mask(field.grid, k), workers)
    if fraction > tolerance:
        raise SupportViolationError.outside_shell(k, fraction)
    return fraction


def hpfio_norm_packet(
    field: Field,
    s: float,
    p: ExponentLike,
    k: int,
    *,
    frame: DirectionFrame | None = None,
    support_tolerance: float = DEFAULT_SUPPORT_TOLERANCE,
    workers: int = 1,
    max_workers: int = 1,
) -> float:
    """
    Return 2^(ks) 2^(k(n-1)/2 (1/2-1/p)) (sum_nu ||chi_nu(D) f||_p^p)^(1/p).

    Args:
        field: Space-domain field with spectrum in shell k.
        s: Smoothness index.
        p: Exponent in (1, inf).
        k: Shell index.
        frame: Direction frame Theta_k; built when omitted.
        support_tolerance: Energy fraction allowed outside the shell.
        workers: Worker count handed to ``scipy.fft``.
        max_workers: Number of directions evaluated concurrently.

    Returns:
        float: Shell estimate of the H^(s,p)_FIO norm.

    Raises:
        InvalidExponentError: If p is outside (1, inf).
        SupportViolationError: If the spectrum leaves the shell.

    """
    exponent = _open_range(p)
    field.require("space")
    check_shell_support(field, k, support_tolerance, workers)
    grid = field.grid
    directions = frame if frame is not None else build_frame(grid.dim, k)
    cutoffs = frame_cutoffs(directions, grid)
    spectrum = scipy.fft.fftn(field.samples, workers=workers)
    power = exponent.as_float()

    def term(index: int) -> float:
        norm = _filtered_norm(field, spectrum, cutoffs.cutoff(index), exponent, workers)
        return norm**power

    total = _power_sum(term, directions.count, max_workers)
    reciprocal = 1.0 / power
    scale = 2.0 ** (k * s) * 2.0 ** (k * (grid.dim - 1) / 2 * (0.5 - reciprocal))
    return scale * total**reciprocal


def directional_terms(
    field: Field,
    p: ExponentLike,
    frame: DirectionFrame,
    workers: int = 1,
) -> list[float]:
    """
    Return ||chi_nu(D) f||_p for every nu in the frame.

    Args:
        field: Space-domain field.
        p: Exponent in (1, inf).
        frame: Direction frame.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        list[float]: One norm per direction, in frame order.

    """
    exponent = _open_range(p)
    cutoffs = frame_cutoffs(frame, field.grid)
    spectrum = scipy.fft.fftn(field.samples, workers=workers)
    return [
        _filtered_norm(field, spectrum, cutoffs.cutoff(index), exponent, workers)
        for index in range(frame.count)
    ]


def reproduce(field: Field, frame: DirectionFrame, workers: int = 1) -> Field:
    """
    Return sum_nu chi_nu(D) f.

    Args:
        field: Space-domain field.
        frame: Direction frame.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Field: Reassembled field.

    """
    cutoffs = frame_cutoffs(frame, field.grid)
    spectrum = scipy.fft.fftn(field.samples, workers=workers)
    total = np.zeros(field.grid.shape)
    for index in range(frame.count):
        total += cutoffs.cutoff(index)
    return Field(field.grid, scipy.fft.ifftn(total * spectrum, workers=workers))

