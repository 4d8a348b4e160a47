"""Concrete operator families over t."""

from dataclasses import dataclass, field

from fiolab.lattice.grid import GridSpec
from fiolab.symbols.amplitudes import AmplitudeSpec
from fiolab.symbols.multipliers import (
    MultiplierSpec,
    ball_average_multiplier,
    complex_mean_multiplier,
    half_wave_multiplier,
    spherical_multiplier,
)
from fiolab.symbols.phases import PhaseSpec


@dataclass(frozen=True, slots=True)
class HalfWaveFamily:
    """
    Half-wave propagators e^(it phi(D)) a(tD).

    Attributes:
        phase: Phase function.
        amplitude: Amplitude, the unit amplitude by default.

    """

    phase: PhaseSpec
    amplitude: AmplitudeSpec = field(default_factory=AmplitudeSpec.one)

    @property
    def label(self) -> str:
        """Short family name used in logs and reports."""
        return f"half_wave_{self.phase.label}_{self.amplitude.label}"

    def symbol(self, grid: GridSpec, t: float) -> MultiplierSpec:
        """
        Tabulate e^(it phi(xi)) a(t xi).

        Args:
            grid: Lattice description.
            t: Time, any real number.

        Returns:
            MultiplierSpec: Half-wave symbol.

        """
        return half_wave_multiplier(grid, self.phase, self.amplitude, t)


@dataclass(frozen=True, slots=True)
class SphericalFamily:
    """
    Spherical means A_t over spheres of radius t.

    Attributes:
        normalized: Average rather than integrate against surface measure.

    """

    normalized: bool = True

    @property
    def label(self) -> str:
        """Short family name used in logs and reports."""
        return "sphere" if self.normalized else "sphere_measure"

    def symbol(self, grid: GridSpec, t: float) -> MultiplierSpec:
        """
        Tabulate the dilated sphere symbol.

        Args:
            grid: Lattice description.
            t: Radius in (0, L/4].

        Returns:
            MultiplierSpec: Spherical-mean symbol.

        """
        return spherical_multiplier(grid, t, normalized=self.normalized)


@dataclass(frozen=True, slots=True)
class ComplexMeanFamily:
    """
    Complex spherical means M^alpha_t of real order.

    Attributes:
        alpha: Real order, 0 for the sphere and 1 for the ball.
        averaged: For alpha = 1, divide by |B_1| (Hardy-Littlewood form).

    """

    alpha: float
    averaged: bool = False

    @property
    def label(self) -> str:
        """Short family name used in logs and reports."""
        if self.averaged:
            return "ball_average"
        return f"complex_{self.alpha:g}"

    def symbol(self, grid: GridSpec, t: float) -> MultiplierSpec:
        """
        Tabulate m_alpha(t xi), or the ball average symbol.

        Args:
            grid: Lattice description.
            t: Radius in (0, L/4].

        Returns:
            MultiplierSpec: Complex-mean symbol.

        """
        if self.averaged and self.alpha == 1:
            return ball_average_multiplier(grid, t)
        return complex_mean_multiplier(grid, t, self.alpha)
