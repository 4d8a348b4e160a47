"""Discrete Fourier transforms under the angular-frequency convention.

f_hat(xi) = h^n * sum_x f(x) exp(-i x.xi) and
f(x) = (2*pi)^-n * sum_xi exp(i x.xi) f_hat(xi) dxi^n,
with h = L/N and dxi = 2*pi/L; both are realized by ``scipy.fft`` with a scalar factor.
"""

import scipy.fft

from .field import Field
from .types import ComplexArray


def dft_forward(field: Field, workers: int = 1) -> Field:
    """
    Transform a space-domain field to the frequency domain.

    Args:
        field: Space-domain field.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Field: Frequency-domain samples f_hat.

    Raises:
        DomainMismatchError: If the field is not in the space domain.

    """
    field.require("space")
    spectrum = scipy.fft.fftn(field.samples, workers=workers) * field.grid.cell_volume
    return Field(field.grid, spectrum, "frequency")


def dft_inverse(field: Field, workers: int = 1) -> Field:
    """
    Transform a frequency-domain field back to the space domain.

    Args:
        field: Frequency-domain field.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Field: Space-domain samples.

    Raises:
        DomainMismatchError: If the field is not in the frequency domain.

    """
    field.require("frequency")
    samples = scipy.fft.ifftn(field.samples, workers=workers) / field.grid.cell_volume
    return Field(field.grid, samples, "space")


def filter_field(field: Field, symbol: ComplexArray, workers: int = 1) -> Field:
    """
    Multiply the spectrum of a space-domain field by tabulated symbol values.

    Args:
        field: Space-domain field.
        symbol: Symbol values on the frequency lattice (FFT order).
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Field: Space-domain field with spectrum symbol * f_hat.

    """
    field.require("space")
    spectrum = scipy.fft.fftn(field.samples, workers=workers)
    return Field(field.grid, scipy.fft.ifftn(symbol * spectrum, workers=workers))
