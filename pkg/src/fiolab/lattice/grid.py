"""Periodic lattice on [0, L)^n and its angular-frequency dual."""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from fiolab.exceptions import InvalidGridError

from .types import BoolArray, IntArray, RealArray

SUPPORTED_DIMENSIONS = (2, 3)
MIN_POINTS_PER_AXIS = 8
MIN_BOX_LENGTH = 8.0
GRID_CACHE_SIZE = 16


@dataclass(frozen=True, slots=True)
class GridSpec:
    """
    Uniform periodic lattice modelling R^n by the torus [0, L)^n.

    Attributes:
        dim: Spatial dimension, 2 or 3.
        points_per_axis: Samples per axis N, a power of two >= 8.
        box_length: Physical side L of the torus, at least 8.

    """

    dim: int
    points_per_axis: int
    box_length: float

    def __post_init__(self) -> None:
        """
        Validate lattice parameters.

        Raises:
            InvalidGridError: If the dimension, point count or box length is invalid.

        """
        if self.dim not in SUPPORTED_DIMENSIONS:
            raise InvalidGridError.unsupported_dimension(self.dim)
        points = self.points_per_axis
        if points < MIN_POINTS_PER_AXIS or points & (points - 1):
            raise InvalidGridError.not_power_of_two(points)
        if not math.isfinite(self.box_length) or self.box_length < MIN_BOX_LENGTH:
            raise InvalidGridError.box_too_small(self.box_length)

    @property
    def spacing(self) -> float:
        """Spatial step L/N."""
        return self.box_length / self.points_per_axis

    @property
    def frequency_step(self) -> float:
        """Angular frequency step 2*pi/L."""
        return 2 * math.pi / self.box_length

    @property
    def nyquist(self) -> float:
        """Largest representable angular frequency per axis, pi*N/L."""
        return math.pi * self.points_per_axis / self.box_length

    @property
    def shape(self) -> tuple[int, ...]:
        """Sample-array shape (N,)*dim."""
        return (self.points_per_axis,) * self.dim

    @property
    def point_count(self) -> int:
        """Total number of lattice points N^dim."""
        return self.points_per_axis**self.dim

    @property
    def cell_volume(self) -> float:
        """Spatial Riemann weight (L/N)^dim."""
        return self.spacing**self.dim

    @property
    def frequency_cell(self) -> float:
        """Frequency Riemann weight (2*pi/L)^dim."""
        return self.frequency_step**self.dim

    @property
    def center(self) -> tuple[float, ...]:
        """Box center (L/2, ..., L/2), itself a lattice point."""
        return (self.box_length / 2,) * self.dim


def make_grid(dim: int, points_per_axis: int, box_length: float) -> GridSpec:
    """
    Build a validated periodic lattice.

    Args:
        dim: Spatial dimension, 2 or 3.
        points_per_axis: Samples per axis, a power of two >= 8.
        box_length: Torus side length, at least 8.

    Returns:
        GridSpec: The lattice description.

    Raises:
        InvalidGridError: If any parameter violates the lattice constraints.

    """
    return GridSpec(
        dim=dim,
        points_per_axis=points_per_axis,
        box_length=float(box_length),
    )


def _freeze[T: np.ndarray](array: T) -> T:
    array.flags.writeable = False
    return array


@lru_cache(maxsize=GRID_CACHE_SIZE)
def axis_frequencies(grid: GridSpec) -> RealArray:
    """
    Return the per-axis angular frequencies in FFT order.

    Args:
        grid: Lattice description.

    Returns:
        RealArray: 2*pi*m/L for m in [-N/2, N/2), ordered as ``numpy.fft.fftfreq``.

    """
    values = 2 * math.pi * np.fft.fftfreq(grid.points_per_axis, d=grid.spacing)
    return _freeze(values.astype(np.float64))


@lru_cache(maxsize=GRID_CACHE_SIZE)
def axis_indices(grid: GridSpec) -> IntArray:
    """
    Return the balanced integer frequency indices m in FFT order.

    Args:
        grid: Lattice description.

    Returns:
        IntArray: Integers in [-N/2, N/2).

    """
    points = grid.points_per_axis
    values = np.fft.fftfreq(points, d=1.0 / points)
    return _freeze(np.rint(values).astype(np.int64))


def frequency_axes(grid: GridSpec) -> tuple[RealArray, ...]:
    """
    Return broadcastable frequency components (xi_1, ..., xi_n).

    Args:
        grid: Lattice description.

    Returns:
        tuple[RealArray, ...]: One sparse array per axis.

    """
    axis = axis_frequencies(grid)
    return tuple(np.meshgrid(*([axis] * grid.dim), indexing="ij", sparse=True))


@lru_cache(maxsize=GRID_CACHE_SIZE)
def frequency_norm(grid: GridSpec) -> RealArray:
    """
    Return |xi| on the full frequency lattice.

    Args:
        grid: Lattice description.

    Returns:
        RealArray: Read-only array of shape ``grid.shape``.

    """
    squared = sum(component**2 for component in frequency_axes(grid))
    return _freeze(np.sqrt(np.broadcast_to(squared, grid.shape)).astype(np.float64))


@lru_cache(maxsize=GRID_CACHE_SIZE)
def radial_index(grid: GridSpec) -> tuple[RealArray, IntArray]:
    """
    Group lattice frequencies by exact radius.

    Radii are keyed on the integer sum of squared indices, so every lattice orbit of
    the hyperoctahedral group maps to the same entry.

    Args:
        grid: Lattice description.

    Returns:
        tuple[RealArray, IntArray]: Unique radii and the inverse map of shape
        ``grid.shape`` into them.

    """
    indices = axis_indices(grid)
    mesh = np.meshgrid(*([indices] * grid.dim), indexing="ij", sparse=True)
    squared = np.broadcast_to(sum(component**2 for component in mesh), grid.shape)
    keys, inverse = np.unique(squared, return_inverse=True)
    radii = grid.frequency_step * np.sqrt(keys.astype(np.float64))
    return _freeze(radii), _freeze(inverse.reshape(grid.shape).astype(np.int64))


@lru_cache(maxsize=GRID_CACHE_SIZE)
def nyquist_mask(grid: GridSpec) -> BoolArray:
    """
    Mark bins whose index equals -N/2 on some axis.

    Args:
        grid: Lattice description.

    Returns:
        BoolArray: ``True`` on the unpaired Nyquist rows.

    """
    half = grid.points_per_axis // 2
    mask = np.zeros(grid.shape, dtype=bool)
    for axis in range(grid.dim):
        index = [slice(None)] * grid.dim
        index[axis] = slice(half, half + 1)
        mask[tuple(index)] = True
    return _freeze(mask)


def coordinates(grid: GridSpec) -> tuple[RealArray, ...]:
    """
    Return broadcastable spatial coordinates x_j = j*L/N.

    Args:
        grid: Lattice description.

    Returns:
        tuple[RealArray, ...]: One sparse array per axis.

    """
    axis = grid.spacing * np.arange(grid.points_per_axis, dtype=np.float64)
    return tuple(np.meshgrid(*([axis] * grid.dim), indexing="ij", sparse=True))


def centered_offsets(
    grid: GridSpec,
    center: tuple[float, ...] | None = None,
) -> tuple[RealArray, ...]:
    """
    Return minimal-image displacements x - center on the torus.

    Args:
        grid: Lattice description.
        center: Reference point; defaults to the box center.

    Returns:
        tuple[RealArray, ...]: One sparse array per axis with values in [-L/2, L/2).

    """
    origin = center if center is not None else grid.center
    length = grid.box_length
    return tuple(
        np.mod(axis - shift + length / 2, length) - length / 2
        for axis, shift in zip(coordinates(grid), origin, strict=True)
    )
