"""Conic frequency regions described by an axis and a half-aperture."""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from fiolab.exceptions import InvalidSymbolError
from fiolab.lattice.types import RealArray

from .bumps import smooth_step


@dataclass(frozen=True, slots=True)
class ConeSpec:
    """
    Cone {xi : angle(xi, axis) <= aperture} in frequency space.

    Attributes:
        axis: Axis direction, normalized on construction.
        aperture: Half-aperture theta_0 in (0, pi).

    """

    axis: tuple[float, ...]
    aperture: float

    def __post_init__(self) -> None:
        """
        Validate and normalize the axis.

        Raises:
            InvalidSymbolError: If the axis is zero or the aperture is outside (0, pi).

        """
        if not 0 < self.aperture < math.pi:
            raise InvalidSymbolError.invalid_aperture()
        length = math.hypot(*self.axis)
        if not math.isfinite(length) or length == 0.0:
            raise InvalidSymbolError.invalid_axis()
        object.__setattr__(self, "axis", tuple(float(c) / length for c in self.axis))

    @classmethod
    def about(cls, axis: Sequence[float], aperture: float) -> "ConeSpec":
        """
        Build a cone from any axis sequence.

        Args:
            axis: Nonzero axis vector.
            aperture: Half-aperture in radians.

        Returns:
            ConeSpec: Validated cone.

        """
        return cls(axis=tuple(float(c) for c in axis), aperture=float(aperture))

    @property
    def dim(self) -> int:
        """Dimension of the ambient space."""
        return len(self.axis)

    def angle(self, components: Sequence[np.ndarray]) -> RealArray:
        """
        Return the angle between xi and the axis, with 0 at xi = 0.

        Args:
            components: Broadcastable frequency components.

        Returns:
            RealArray: Angles in [0, pi].

        """
        if len(components) != self.dim:
            raise InvalidSymbolError.axis_dimension(self.dim, len(components))
        norm = np.sqrt(sum(np.square(c) for c in components))
        projection = sum(a * c for a, c in zip(self.axis, components, strict=True))
        with np.errstate(divide="ignore", invalid="ignore"):
            cosine = np.where(norm > 0, projection / np.where(norm > 0, norm, 1.0), 1.0)
        return np.arccos(np.clip(cosine, -1.0, 1.0))

    def cutoff(self, components: Sequence[np.ndarray]) -> RealArray:
        """
        Return the smooth degree-0 cutoff: 1 within aperture/2, 0 beyond the aperture.

        The value at xi = 0 is 0.

        Args:
            components: Broadcastable frequency components.

        Returns:
            RealArray: Cutoff values in [0, 1].

        """
        half = self.aperture / 2
        values = 1.0 - smooth_step((self.angle(components) - half) / half)
        norm = np.sqrt(sum(np.square(c) for c in components))
        return np.where(norm > 0, values, 0.0)

    def contains(self, direction: Sequence[float]) -> bool:
        """
        Tell whether a direction lies in the closed cone.

        Args:
            direction: Nonzero vector.

        Returns:
            bool: ``True`` if the angle to the axis is at most the aperture.

        """
        components = [np.asarray(float(c)) for c in direction]
        return bool(self.angle(components) <= self.aperture + 1e-12)
