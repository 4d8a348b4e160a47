"""Riemann-sum L^p norms and spectral diagnostics for lattice fields."""

import math
from fractions import Fraction

import numpy as np
import scipy.fft

from fiolab.exponent import LebesgueExponent

from .field import Field
from .grid import frequency_norm
from .types import BoolArray

SPECTRAL_FLOOR = 1e-10


def lp_norm(field: Field, p: LebesgueExponent | float | str | Fraction) -> float:
    """
    Return (sum |f(x)|^p h^n)^(1/p), or max |f| for p = inf.

    The sum is taken on |f| / max |f| and rescaled, so large p does not overflow.

    Args:
        field: Space-domain field.
        p: Exponent in [1, inf].

    Returns:
        float: Discrete L^p norm.

    Raises:
        InvalidExponentError: If p < 1 or unparsable.
        DomainMismatchError: If the field is not in the space domain.

    """
    exponent = LebesgueExponent.parse(p)
    field.require("space")
    magnitude = field.magnitude()
    peak = float(magnitude.max())
    if exponent.is_infinite() or peak == 0.0:
        return peak
    power = exponent.as_float()
    total = float(np.sum((magnitude / peak) ** power)) * field.grid.cell_volume
    return peak * total ** (1.0 / power)


def spectral_l2_norm(field: Field) -> float:
    """
    Return ((2*pi)^-n sum |f_hat|^2 dxi^n)^(1/2) for a frequency-domain field.

    Args:
        field: Frequency-domain field.

    Returns:
        float: L^2 norm computed on the frequency side.

    """
    field.require("frequency")
    grid = field.grid
    weight = grid.frequency_cell / (2 * math.pi) ** grid.dim
    return math.sqrt(float(np.sum(np.abs(field.samples) ** 2)) * weight)


def boundary_leakage(field: Field) -> float:
    """
    Return max |f| on the faces x_i = 0 of the box divided by max |f|.

    Args:
        field: Space-domain field.

    Returns:
        float: Boundary-to-peak ratio, 0 for the zero field.

    """
    field.require("space")
    magnitude = field.magnitude()
    peak = float(magnitude.max())
    if peak == 0.0:
        return 0.0
    faces = max(
        float(np.take(magnitude, 0, axis=axis).max())
        for axis in range(field.grid.dim)
    )
    return faces / peak


def energy_outside(field: Field, support: BoolArray, workers: int = 1) -> float:
    """
    Return the spectral energy fraction of a space-domain field outside a mask.

    Args:
        field: Space-domain field.
        support: Boolean mask on the frequency lattice.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        float: Fraction of sum |f_hat|^2 on bins where ``support`` is false.

    """
    field.require("space")
    energy = np.abs(scipy.fft.fftn(field.samples, workers=workers)) ** 2
    total = float(energy.sum())
    if total == 0.0:
        return 0.0
    return float(energy[~support].sum()) / total


def max_frequency(field: Field, workers: int = 1) -> float:
    """
    Return the largest |xi| carrying non-negligible spectral amplitude.

    Args:
        field: Field in either domain.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        float: Largest energetic radius, 0 for the zero field.

    """
    spectrum = (
        field.samples
        if field.domain == "frequency"
        else scipy.fft.fftn(field.samples, workers=workers)
    )
    magnitude = np.abs(spectrum)
    peak = float(magnitude.max())
    if peak == 0.0:
        return 0.0
    energetic = magnitude > SPECTRAL_FLOOR * peak
    return float(frequency_norm(field.grid)[energetic].max())


def top_shell(field: Field, workers: int = 1) -> int:
    """
    Return the smallest k >= 0 with the energetic spectrum inside |xi| <= 2^(k+1).

    Args:
        field: Field in either domain.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        int: Top dyadic shell index.

    """
    radius = max_frequency(field, workers)
    if radius <= 2.0:
        return 0
    return math.ceil(math.log2(radius)) - 1
