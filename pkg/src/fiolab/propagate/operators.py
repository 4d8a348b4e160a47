"""Single-time operators: multipliers, half waves and spherical means."""

import numpy as np
import scipy.fft
from numpy.typing import ArrayLike

from fiolab.exceptions import InvalidGridError
from fiolab.lattice.field import Field
from fiolab.lattice.grid import frequency_axes, nyquist_mask
from fiolab.lattice.transforms import filter_field
from fiolab.lattice.types import ComplexArray, RealArray
from fiolab.symbols.amplitudes import AmplitudeSpec
from fiolab.symbols.multipliers import (
    MultiplierSpec,
    ball_average_multiplier,
    complex_mean_multiplier,
    half_wave_multiplier,
    spherical_multiplier,
)
from fiolab.symbols.phases import PhaseSpec

SPARSE_SPECTRUM_FLOOR = 1e-13


def apply_multiplier(field: Field, symbol: MultiplierSpec, workers: int = 1) -> Field:
    """
    Return sigma(D) f.

    Args:
        field: Space-domain field.
        symbol: Tabulated symbol on the same lattice.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Field: Inverse transform of sigma * f_hat.

    Raises:
        InvalidGridError: If the symbol lives on another lattice.

    """
    if symbol.grid != field.grid:
        raise InvalidGridError.mismatch()
    return filter_field(field, symbol.values, workers)


def half_wave(
    field: Field,
    phase: PhaseSpec,
    amplitude: AmplitudeSpec | None = None,
    t: float = 0.0,
    workers: int = 1,
) -> Field:
    """
    Return e^(it phi(D)) a(tD) f.

    Args:
        field: Space-domain field.
        phase: Phase function.
        amplitude: Amplitude, the unit amplitude when omitted.
        t: Time.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Field: Propagated field.

    """
    weight = amplitude if amplitude is not None else AmplitudeSpec.one()
    return apply_multiplier(
        field,
        half_wave_multiplier(field.grid, phase, weight, t),
        workers,
    )


def spherical_mean(
    field: Field,
    t: float,
    weight: float | None = None,
    *,
    normalized: bool = True,
    workers: int = 1,
) -> Field:
    """
    Return the spherical mean A_t f, computed spectrally.

    Args:
        field: Space-domain field.
        t: Radius in (0, L/4].
        weight: Constant density psi on the sphere, 1 when omitted.
        normalized: Average rather than integrate against surface measure.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Field: Spherical mean.

    Raises:
        InvalidSymbolError: If t is out of range.

    """
    mean = apply_multiplier(
        field,
        spherical_multiplier(field.grid, t, normalized=normalized),
        workers,
    )
    return mean if weight is None else mean.scale(weight)


def complex_mean(field: Field, t: float, alpha: float, workers: int = 1) -> Field:
    """
    Return M^alpha_t f for real alpha.

    Args:
        field: Space-domain field.
        t: Radius in (0, L/4].
        alpha: Real order.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Field: Complex spherical mean.

    Raises:
        InvalidSymbolError: If t or alpha is invalid.

    """
    multiplier = complex_mean_multiplier(field.grid, t, alpha)
    return apply_multiplier(field, multiplier, workers)


def ball_average(field: Field, t: float, workers: int = 1) -> Field:
    """
    Return the centered average of f over B_t(x).

    Args:
        field: Space-domain field.
        t: Radius in (0, L/4].
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Field: Ball average.

    """
    return apply_multiplier(field, ball_average_multiplier(field.grid, t), workers)


def sparse_spectrum(
    field: Field,
    *,
    drop_nyquist: bool = False,
) -> tuple[RealArray, ComplexArray]:
    """
    Return the frequencies and coefficients of f above a relative floor of the peak.

    Args:
        field: Space-domain field.
        drop_nyquist: Also drop the Nyquist bins.

    Returns:
        tuple[RealArray, ComplexArray]: Frequencies of shape (K, n) and coefficients
        c with f(x) = sum c e^(i xi.x).

    """
    field.require("space")
    grid = field.grid
    spectrum = scipy.fft.fftn(field.samples)
    magnitude = np.abs(spectrum)
    keep = magnitude > SPARSE_SPECTRUM_FLOOR * float(magnitude.max(initial=0.0))
    if drop_nyquist:
        keep &= ~nyquist_mask(grid)
    frequencies = np.stack(
        [np.broadcast_to(axis, grid.shape)[keep] for axis in frequency_axes(grid)],
        axis=-1,
    )
    return frequencies, spectrum[keep] / grid.point_count


def evaluate_on_points(
    field: Field,
    phase: PhaseSpec,
    points: ArrayLike,
    times: ArrayLike,
    amplitude: AmplitudeSpec | None = None,
) -> ComplexArray:
    """
    Synthesize e^(it phi(D)) a(tD) f at arbitrary points from its sparse spectrum.

    Bins below a relative floor of the spectral peak are dropped.

    Args:
        field: Space-domain field.
        phase: Phase function.
        points: Spatial points of shape (m, n).
        times: Sample times of shape (T,).
        amplitude: Amplitude, the unit amplitude when omitted.

    Returns:
        ComplexArray: Values of shape (T, m).

    """
    weight = amplitude if amplitude is not None else AmplitudeSpec.one()
    frequencies, coefficients = sparse_spectrum(
        field,
        drop_nyquist=not (phase.is_even() and weight.is_even()),
    )
    locations = np.atleast_2d(np.asarray(points, dtype=np.float64))
    waves = np.exp(1j * locations @ frequencies.T)
    phases: RealArray = phase.evaluate_points(frequencies)
    samples = np.atleast_1d(np.asarray(times, dtype=np.float64))
    rows = []
    for t in samples:
        if weight.form == "conic_cutoff":
            sign = -1.0 if t < 0 else 1.0
            factor = weight.evaluate_points(sign * frequencies)
        else:
            factor = weight.evaluate_points(t * frequencies)
        rows.append(waves @ (np.exp(1j * t * phases) * factor * coefficients))
    return np.asarray(rows)
