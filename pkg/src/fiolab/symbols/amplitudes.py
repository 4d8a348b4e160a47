"""Amplitudes a(eta) and their symbol-class check."""

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

from fiolab.exceptions import InvalidSymbolError
from fiolab.lattice.types import ComplexArray

from .cones import ConeSpec

type AmplitudeForm = Literal["one", "conic_cutoff", "polyhomogeneous"]

DIFFERENCE_STEP = 1e-3


@dataclass(frozen=True, slots=True)
class AmplitudeSpec:
    """
    Amplitude a(eta) of order m.

    Attributes:
        form: ``one``, ``conic_cutoff`` or ``polyhomogeneous`` (c * <eta>^m).
        order: Symbol order m.
        coefficient: Constant c of the polyhomogeneous form.
        cone: Cone of the conic cutoff.

    """

    form: AmplitudeForm
    order: float = 0.0
    coefficient: complex | None = None
    cone: ConeSpec | None = None

    def __post_init__(self) -> None:
        """
        Validate form-specific parameters.

        Raises:
            InvalidSymbolError: If the cone or coefficient the form needs is missing.

        """
        if self.form == "conic_cutoff" and self.cone is None:
            raise InvalidSymbolError.invalid_axis()
        if self.form == "polyhomogeneous" and self.coefficient is None:
            raise InvalidSymbolError.coefficient_required()

    @classmethod
    def one(cls) -> "AmplitudeSpec":
        """
        Build a(eta) = 1.

        Returns:
            AmplitudeSpec: Unit amplitude of order 0.

        """
        return cls(form="one")

    @classmethod
    def polyhomogeneous(
        cls,
        order: float,
        coefficient: complex = 1.0,
    ) -> "AmplitudeSpec":
        """
        Build a(eta) = c * <eta>^m.

        Args:
            order: Symbol order m.
            coefficient: Constant c.

        Returns:
            AmplitudeSpec: Polyhomogeneous amplitude.

        """
        return cls(
            form="polyhomogeneous",
            order=float(order),
            coefficient=complex(coefficient),
        )

    def evaluate(self, components: Sequence[np.ndarray]) -> ComplexArray:
        """
        Evaluate a on broadcastable frequency components.

        Args:
            components: One array per axis.

        Returns:
            ComplexArray: Amplitude values.

        """
        shape = np.broadcast_shapes(*(np.shape(c) for c in components))
        if self.form == "one":
            return np.ones(shape, dtype=np.complex128)
        if self.form == "conic_cutoff" and self.cone is not None:
            cutoff = np.broadcast_to(self.cone.cutoff(components), shape)
            return cutoff.astype(np.complex128)
        squared = sum(np.square(c) for c in components)
        bracket = np.power(1.0 + squared, self.order / 2)
        coefficient = self.coefficient if self.coefficient is not None else 1.0
        return np.broadcast_to(coefficient * bracket, shape).astype(np.complex128)

    def evaluate_points(self, points: np.ndarray) -> ComplexArray:
        """
        Evaluate a on an array of frequency vectors.

        Args:
            points: Array of shape (..., n).

        Returns:
            ComplexArray: Values of shape (...).

        """
        array = np.asarray(points, dtype=np.float64)
        return self.evaluate([array[..., i] for i in range(array.shape[-1])])

    def is_even(self) -> bool:
        """
        Tell whether a(-eta) = a(eta).

        Returns:
            bool: ``False`` only for conic cutoffs.

        """
        return self.form != "conic_cutoff"

    @property
    def label(self) -> str:
        """Short label used in reports."""
        if self.form == "polyhomogeneous":
            return f"poly_{self.order:g}"
        return self.form


def conic_cutoff(axis: Sequence[float], aperture: float) -> AmplitudeSpec:
    """
    Build the smooth degree-0 cutoff of the cone about ``axis``.

    The cutoff equals 1 for angle(xi, axis) <= aperture/2 and 0 for angle >= aperture.

    Args:
        axis: Nonzero axis vector.
        aperture: Aperture theta_0 in (0, pi).

    Returns:
        AmplitudeSpec: Conic cutoff amplitude.

    Raises:
        InvalidSymbolError: If the aperture is outside (0, pi) or the axis is zero.

    """
    return AmplitudeSpec(form="conic_cutoff", cone=ConeSpec.about(axis, aperture))


def symbol_bound_constant(amplitude: AmplitudeSpec, samples: np.ndarray) -> float:
    """
    Return the smallest C with |d^beta a(eta)| <= C <eta>^(m-|beta|) on the samples.

    Derivatives up to order two are taken by central differences with a step
    proportional to <eta>.

    Args:
        amplitude: Amplitude under test.
        samples: Frequency vectors of shape (k, n).

    Returns:
        float: Measured symbol constant.

    """
    points = np.asarray(samples, dtype=np.float64)
    dim = points.shape[1]
    bracket = np.sqrt(1.0 + np.sum(points**2, axis=1))
    step = DIFFERENCE_STEP * bracket
    unit = np.eye(dim)

    def value(offset: np.ndarray) -> np.ndarray:
        return amplitude.evaluate_points(points + offset)

    bounds = [np.abs(value(np.zeros(dim))) / bracket**amplitude.order]
    for i in range(dim):
        shift = step[:, None] * unit[i]
        first = (value(shift) - value(-shift)) / (2 * step)
        bounds.append(np.abs(first) / bracket ** (amplitude.order - 1))
    for i, j in itertools.combinations_with_replacement(range(dim), 2):
        shift_i = step[:, None] * unit[i]
        shift_j = step[:, None] * unit[j]
        second = (
            value(shift_i + shift_j)
            - value(shift_i - shift_j)
            - value(shift_j - shift_i)
            + value(-shift_i - shift_j)
        ) / (4 * step**2)
        bounds.append(np.abs(second) / bracket ** (amplitude.order - 2))
    return float(max(bound.max() for bound in bounds))
