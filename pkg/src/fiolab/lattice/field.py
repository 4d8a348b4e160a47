"""Immutable complex samples on a periodic lattice."""

from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from fiolab.exceptions import DomainMismatchError, InvalidGridError

from .grid import GridSpec, coordinates
from .types import ComplexArray, DomainTag, RealArray


@dataclass(frozen=True, slots=True, eq=False)
class Field:
    """
    Complex-valued samples on a lattice, tagged with their transform domain.

    The samples are copied on construction and frozen, so a field can be shared
    between threads without locking.

    Attributes:
        grid: Lattice the samples live on.
        samples: Complex array of shape ``grid.shape``.
        domain: ``"space"`` or ``"frequency"``.

    """

    grid: GridSpec
    samples: ComplexArray
    domain: DomainTag = "space"

    def __post_init__(self) -> None:
        """
        Copy, reshape and freeze the samples.

        Raises:
            InvalidGridError: If the sample count does not match the lattice.

        """
        array = np.array(self.samples, dtype=np.complex128, copy=True)
        if array.shape != self.grid.shape:
            if array.size != self.grid.point_count:
                raise InvalidGridError.wrong_shape(self.grid.shape, array.shape)
            array = array.reshape(self.grid.shape)
        array.flags.writeable = False
        object.__setattr__(self, "samples", array)

    def require(self, domain: DomainTag) -> None:
        """
        Check the domain tag.

        Args:
            domain: Expected domain.

        Raises:
            DomainMismatchError: If the field lives in the other domain.

        """
        if self.domain != domain:
            raise DomainMismatchError.expected(domain, self.domain)

    def with_samples(self, samples: ComplexArray) -> "Field":
        """
        Return a field on the same lattice and domain with new samples.

        Args:
            samples: Replacement samples.

        Returns:
            Field: New field.

        """
        return Field(self.grid, samples, self.domain)

    def scale(self, factor: complex) -> "Field":
        """
        Multiply every sample by a constant.

        Args:
            factor: Complex scale factor.

        Returns:
            Field: Scaled field.

        """
        return self.with_samples(factor * self.samples)

    def add(self, other: "Field") -> "Field":
        """
        Add another field sample-wise.

        Args:
            other: Field on the same lattice and domain.

        Returns:
            Field: Sum of both fields.

        Raises:
            InvalidGridError: If the lattices differ.
            DomainMismatchError: If the domains differ.

        """
        if other.grid != self.grid:
            raise InvalidGridError.mismatch()
        other.require(self.domain)
        return self.with_samples(self.samples + other.samples)

    def magnitude(self) -> RealArray:
        """
        Return |samples|.

        Returns:
            RealArray: Sample moduli.

        """
        return np.abs(self.samples)


def zeros(grid: GridSpec, domain: DomainTag = "space") -> Field:
    """
    Build the zero field.

    Args:
        grid: Lattice description.
        domain: Domain tag of the result.

    Returns:
        Field: Field of zeros.

    """
    return Field(grid, np.zeros(grid.shape, dtype=np.complex128), domain)


def constant_field(grid: GridSpec, value: complex) -> Field:
    """
    Build a constant space-domain field.

    Args:
        grid: Lattice description.
        value: Constant sample value.

    Returns:
        Field: Constant field.

    """
    return Field(grid, np.full(grid.shape, value, dtype=np.complex128))


def plane_wave(grid: GridSpec, index: Sequence[int], amplitude: complex = 1.0) -> Field:
    """
    Build the lattice plane wave amplitude * exp(i xi0 . x) with xi0 = 2*pi*index/L.

    Args:
        grid: Lattice description.
        index: Integer frequency index per axis, each in [-N/2, N/2).
        amplitude: Complex amplitude.

    Returns:
        Field: Plane-wave field.

    Raises:
        InvalidGridError: If the index has the wrong length.

    """
    if len(index) != grid.dim:
        raise InvalidGridError.wrong_shape((grid.dim,), (len(index),))
    phase = sum(
        grid.frequency_step * component * axis
        for component, axis in zip(index, coordinates(grid), strict=True)
    )
    return Field(grid, amplitude * np.exp(1j * np.broadcast_to(phase, grid.shape)))


def delta(grid: GridSpec, index: Sequence[int] | None = None) -> Field:
    """
    Build the unit impulse at a lattice point.

    Args:
        grid: Lattice description.
        index: Lattice index of the impulse; defaults to the origin.

    Returns:
        Field: Impulse field.

    """
    samples = np.zeros(grid.shape, dtype=np.complex128)
    samples[tuple(index) if index is not None else (0,) * grid.dim] = 1.0
    return Field(grid, samples)


def from_function(
    grid: GridSpec,
    function: Callable[..., np.ndarray],
) -> Field:
    """
    Sample a function of the coordinates x_1, ..., x_n on the lattice.

    Args:
        grid: Lattice description.
        function: Callable receiving one broadcastable coordinate array per axis.

    Returns:
        Field: Sampled space-domain field.

    """
    values = function(*coordinates(grid))
    return Field(grid, np.broadcast_to(values, grid.shape))
