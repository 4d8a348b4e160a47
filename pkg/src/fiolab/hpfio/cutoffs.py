"""Frequency cutoffs: the frame partition chi_nu and the normalized family phi_omega."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from fiolab.exceptions import InvalidGridError
from fiolab.lattice.grid import GridSpec, frequency_axes, frequency_norm, nyquist_mask
from fiolab.lattice.types import RealArray
from fiolab.symbols.bumps import cap_bump, smooth_step

from .models import DirectionFrame, DirectionQuadrature

INNER_FRACTION = 1 / 3
OUTER_FRACTION = 2 / 3
COVERING_MARGIN = 1.25
RADIAL_START = 0.25
RADIAL_WIDTH = 0.25


def unit_frequencies(components: Sequence[np.ndarray]) -> tuple[RealArray, RealArray]:
    """
    Return (xi / |xi|, |xi|) with the zero frequency mapped to the zero vector.

    Args:
        components: One broadcastable array per axis.

    Returns:
        tuple[RealArray, RealArray]: Unit vectors stacked on the last axis, and radii.

    """
    stacked = np.stack(np.broadcast_arrays(*components), axis=-1).astype(np.float64)
    radius = np.linalg.norm(stacked, axis=-1)
    safe = np.where(radius > 0, radius, 1.0)
    return stacked / safe[..., None], radius


def chord_distance(units: RealArray, direction: RealArray) -> RealArray:
    """
    Return |xi_hat - direction| for stacked unit vectors.

    Args:
        units: Unit vectors stacked on the last axis.
        direction: Unit vector.

    Returns:
        RealArray: Chordal distances.

    """
    return np.sqrt(np.maximum(2.0 - 2.0 * (units @ direction), 0.0))


def cap_profile(distance: RealArray, inner: float, outer: float) -> RealArray:
    """
    Return 1 on distance <= inner, 0 on distance >= outer, smooth in between.

    Args:
        distance: Chordal distances.
        inner: Plateau radius.
        outer: Support radius.

    Returns:
        RealArray: Cap profile values.

    """
    return 1.0 - smooth_step((distance - inner) / (outer - inner))


@dataclass(frozen=True, slots=True, eq=False)
class FrameCutoffs:
    """
    Degree-0 partition of unity chi_nu = g_nu / sum_mu g_mu on a lattice.

    Attributes:
        frame: Direction frame.
        grid: Lattice description.
        inner: Plateau radius of every cap.
        outer: Support radius of every cap.
        units: Unit frequencies of the lattice.
        total: sum_mu g_mu on the lattice.

    """

    frame: DirectionFrame
    grid: GridSpec
    inner: float
    outer: float
    units: RealArray
    total: RealArray

    def _excluded(self) -> np.ndarray:
        return nyquist_mask(self.grid) | (frequency_norm(self.grid) == 0)

    def cap(self, index: int) -> RealArray:
        """
        Return the unnormalized cap g_nu.

        Args:
            index: Direction index.

        Returns:
            RealArray: Values on the lattice.

        """
        distance = chord_distance(self.units, self.frame.directions[index])
        return cap_profile(distance, self.inner, self.outer)

    def cutoff(self, index: int) -> RealArray:
        """
        Return chi_nu, zero at the origin and on unpaired Nyquist bins.

        Args:
            index: Direction index.

        Returns:
            RealArray: Values on the lattice.

        """
        values = self.cap(index) / self.total
        return np.where(self._excluded(), 0.0, values)


def frame_cutoffs(frame: DirectionFrame, grid: GridSpec) -> FrameCutoffs:
    """
    Build the partition chi_nu subordinate to the caps of a frame.

    Each cap is flat on |xi_hat - nu| <= 2^(-k/2)/3 and vanishes beyond
    max(1.25 rho, 2^(-k/2) 2/3), rho being the covering radius of the frame,
    which keeps every support inside |xi_hat - nu| <= 2^(-k/2+1).

    Args:
        frame: Direction frame.
        grid: Lattice of the same dimension.

    Returns:
        FrameCutoffs: Partition of unity on xi != 0.

    Raises:
        InvalidGridError: If the frame and lattice dimensions differ.

    """
    if frame.dim != grid.dim:
        raise InvalidGridError.mismatch()
    inner = INNER_FRACTION * frame.separation
    outer = max(
        COVERING_MARGIN * frame.covering_radius,
        OUTER_FRACTION * frame.separation,
    )
    units, _ = unit_frequencies(frequency_axes(grid))
    total = np.zeros(grid.shape)
    for direction in frame.directions:
        total += cap_profile(chord_distance(units, direction), inner, outer)
    total = np.where(total > 0, total, 1.0)
    total.flags.writeable = False
    return FrameCutoffs(
        frame=frame,
        grid=grid,
        inner=inner,
        outer=outer,
        units=units,
        total=total,
    )


def radial_cutoff(radius: RealArray) -> RealArray:
    """
    Return the radial factor, 0 on |xi| <= 1/4 and 1 on |xi| >= 1/2.

    Args:
        radius: Frequency radii.

    Returns:
        RealArray: Radial factor.

    """
    return smooth_step((radius - RADIAL_START) / RADIAL_WIDTH)


def cap_family(units: RealArray, radius: RealArray, omega: RealArray) -> RealArray:
    """
    Return g_omega(xi) = h(|xi|^(1/2) |xi_hat - omega|) times the radial factor.

    The support lies in |xi| >= 1/4 and |xi_hat - omega| <= |xi|^(-1/2).

    Args:
        units: Unit frequencies stacked on the last axis.
        radius: Frequency radii.
        omega: Unit direction.

    Returns:
        RealArray: Unnormalized family values.

    """
    angular = cap_bump(np.sqrt(radius) * chord_distance(units, omega))
    return angular * radial_cutoff(radius)


@dataclass(frozen=True, slots=True, eq=False)
class ConicFamily:
    """
    Normalized family phi_omega = g_omega / N^(1/2) with N = sum_omega w g_omega^2.

    Attributes:
        quadrature: Omega-quadrature rule.
        units: Unit frequencies of the evaluation points.
        radius: Radii of the evaluation points.
        normalizer: N at every evaluation point, 1 where it vanishes.

    """

    quadrature: DirectionQuadrature
    units: RealArray
    radius: RealArray
    normalizer: RealArray

    def value(self, index: int) -> RealArray:
        """
        Return phi_omega for quadrature node ``index``.

        Args:
            index: Node index.

        Returns:
            RealArray: Family values at the evaluation points.

        """
        omega = self.quadrature.directions[index]
        return cap_family(self.units, self.radius, omega) / np.sqrt(self.normalizer)

    def peak(self) -> RealArray:
        """
        Return max over nodes of phi_omega at every evaluation point.

        Returns:
            RealArray: Pointwise maximum.

        """
        result = np.zeros(self.radius.shape)
        for index in range(self.quadrature.count):
            result = np.maximum(result, self.value(index))
        return result


def conic_family(
    components: Sequence[np.ndarray],
    quadrature: DirectionQuadrature,
) -> ConicFamily:
    """
    Normalize the cap family by quadrature at the given frequencies.

    Args:
        components: One broadcastable array per axis.
        quadrature: Omega-quadrature rule.

    Returns:
        ConicFamily: Family whose weighted squares sum to 1 where |xi| > 1/4.

    """
    units, radius = unit_frequencies(components)
    normalizer = np.zeros(radius.shape)
    for omega, weight in zip(quadrature.directions, quadrature.weights, strict=True):
        normalizer += weight * cap_family(units, radius, omega) ** 2
    normalizer = np.where(normalizer > 0, normalizer, 1.0)
    return ConicFamily(quadrature, units, radius, normalizer)
