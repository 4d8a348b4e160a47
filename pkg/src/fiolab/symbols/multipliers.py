"""Tabulated Fourier multipliers on the frequency lattice."""

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from fiolab.exceptions import InvalidGridError, InvalidSymbolError
from fiolab.lattice.grid import (
    GridSpec,
    frequency_axes,
    frequency_norm,
    nyquist_mask,
    radial_index,
)
from fiolab.lattice.types import BoolArray, ComplexArray, RealArray

from .amplitudes import AmplitudeSpec
from .bumps import plateau
from .phases import PhaseSpec
from .radial import ball_average_profile, complex_mean_profile, sphere_profile

MAX_DILATION_FRACTION = 0.25


@dataclass(frozen=True, slots=True, eq=False)
class MultiplierSpec:
    """
    Symbol sigma(xi) tabulated on a frequency lattice (FFT order).

    Attributes:
        grid: Lattice the table belongs to.
        values: Complex symbol values of shape ``grid.shape``.
        label: Short description used in logs and reports.
        dilation: Time or dilation parameter t the symbol was built for.
        phase: Phase of a half-wave symbol, if any.
        amplitude: Amplitude of a half-wave symbol, if any.
        radial: Whether the symbol depends on |xi| only.

    """

    grid: GridSpec
    values: ComplexArray
    label: str
    dilation: float = 1.0
    phase: PhaseSpec | None = None
    amplitude: AmplitudeSpec | None = None
    radial: bool = False

    def __post_init__(self) -> None:
        """
        Copy and freeze the table.

        Raises:
            InvalidGridError: If the table does not match the lattice.

        """
        table = np.array(self.values, dtype=np.complex128, copy=True)
        if table.shape != self.grid.shape:
            raise InvalidGridError.wrong_shape(self.grid.shape, table.shape)
        table.flags.writeable = False
        object.__setattr__(self, "values", table)

    def magnitude(self) -> RealArray:
        """
        Return |sigma|.

        Returns:
            RealArray: Symbol moduli.

        """
        return np.abs(self.values)


def check_dilation(grid: GridSpec, t: float) -> None:
    """
    Check that a dilation keeps the dilated kernel inside the torus.

    Args:
        grid: Lattice description.
        t: Dilation parameter.

    Raises:
        InvalidSymbolError: If t is outside (0, L/4].

    """
    limit = MAX_DILATION_FRACTION * grid.box_length
    if not 0 < t <= limit:
        raise InvalidSymbolError.dilation_out_of_range(t, limit)


def tabulate_radial(
    grid: GridSpec,
    profile: Callable[[RealArray], RealArray],
    t: float = 1.0,
) -> RealArray:
    """
    Tabulate profile(t |xi|) on the lattice, evaluating once per distinct radius.

    Args:
        grid: Lattice description.
        profile: Radial profile.
        t: Dilation parameter.

    Returns:
        RealArray: Values of shape ``grid.shape``.

    """
    radii, inverse = radial_index(grid)
    return profile(t * radii)[inverse]


def identity_multiplier(grid: GridSpec) -> MultiplierSpec:
    """
    Build sigma = 1.

    Args:
        grid: Lattice description.

    Returns:
        MultiplierSpec: Identity symbol.

    """
    return MultiplierSpec(grid, np.ones(grid.shape), "identity", radial=True)


def spherical_multiplier(
    grid: GridSpec,
    t: float,
    *,
    normalized: bool = True,
) -> MultiplierSpec:
    """
    Tabulate the dilated surface-measure transform b(t xi).

    Args:
        grid: Lattice description.
        t: Radius in (0, L/4].
        normalized: Divide by |S^(n-1)| so that constants are preserved.

    Returns:
        MultiplierSpec: Radial spherical-mean symbol.

    Raises:
        InvalidSymbolError: If t is out of range.

    """
    check_dilation(grid, t)
    values = tabulate_radial(
        grid,
        lambda r: sphere_profile(grid.dim, r, normalized=normalized),
        t,
    )
    label = "sphere" if normalized else "sphere_measure"
    return MultiplierSpec(grid, values, label, dilation=t, radial=True)


def complex_mean_multiplier(
    grid: GridSpec,
    t: float,
    alpha: float | complex,
) -> MultiplierSpec:
    """
    Tabulate the complex spherical mean symbol m_alpha(t xi) for real alpha.

    For alpha = 0 the table equals ``sphere_ratio(n)`` times the normalized spherical
    mean; for alpha = 1 it is the transform of the unnormalized ball integral.

    Args:
        grid: Lattice description.
        t: Radius in (0, L/4].
        alpha: Real order with alpha >= 1 - n/2.

    Returns:
        MultiplierSpec: Radial complex-mean symbol.

    Raises:
        InvalidSymbolError: If t is out of range or alpha is invalid.

    """
    check_dilation(grid, t)
    values = tabulate_radial(
        grid,
        lambda r: complex_mean_profile(grid.dim, alpha, r),
        t,
    )
    order = alpha.real if isinstance(alpha, complex) else alpha
    return MultiplierSpec(grid, values, f"complex_{order:g}", dilation=t, radial=True)


def ball_average_multiplier(grid: GridSpec, t: float) -> MultiplierSpec:
    """
    Tabulate the symbol of the centered ball average over B_t(x).

    Args:
        grid: Lattice description.
        t: Radius in (0, L/4].

    Returns:
        MultiplierSpec: Radial ball-average symbol.

    """
    check_dilation(grid, t)
    values = tabulate_radial(grid, lambda r: ball_average_profile(grid.dim, r), t)
    return MultiplierSpec(grid, values, "ball_average", dilation=t, radial=True)


def half_wave_multiplier(
    grid: GridSpec,
    phase: PhaseSpec,
    amplitude: AmplitudeSpec,
    t: float,
) -> MultiplierSpec:
    """
    Tabulate e^(i t phi(xi)) a(t xi).

    Degree-zero cutoffs are evaluated at sign(t) xi, so t = 0 keeps the cone.
    Unless both phase and amplitude are even, the unpaired Nyquist bins are
    dropped.

    Args:
        grid: Lattice description.
        phase: Phase function.
        amplitude: Amplitude.
        t: Time, any real number.

    Returns:
        MultiplierSpec: Half-wave symbol.

    """
    components = frequency_axes(grid)
    if amplitude.form == "conic_cutoff":
        sign = -1.0 if t < 0 else 1.0
        weight = amplitude.evaluate([sign * c for c in components])
    else:
        weight = amplitude.evaluate([t * c for c in components])
    values = np.exp(1j * phase.on_grid(grid, t)) * np.broadcast_to(weight, grid.shape)
    if not (phase.is_even() and amplitude.is_even()):
        values = np.where(nyquist_mask(grid), 0.0, values)
    radial = (
        phase.kind in {"euclidean_norm", "zero"}
        and phase.cone is None
        and amplitude.form != "conic_cutoff"
    )
    return MultiplierSpec(
        grid,
        values,
        f"half_wave_{phase.label}",
        dilation=t,
        phase=phase,
        amplitude=amplitude,
        radial=radial,
    )


def bessel_potential(grid: GridSpec, s: float) -> RealArray:
    """
    Tabulate <xi>^s = (1 + |xi|^2)^(s/2).

    Args:
        grid: Lattice description.
        s: Smoothness exponent.

    Returns:
        RealArray: Values of shape ``grid.shape``.

    """
    return np.power(1.0 + frequency_norm(grid) ** 2, s / 2)


def shell_symbol(grid: GridSpec, k: int) -> RealArray:
    """
    Tabulate psi_k(xi) = Phi(|xi| / 2^k) - Phi(|xi| / 2^(k-1)).

    Args:
        grid: Lattice description.
        k: Shell index >= 0.

    Returns:
        RealArray: Bump supported in 2^(k-1) <= |xi| <= 2^(k+1), equal to 1 at 2^k.

    """
    radius = frequency_norm(grid)
    return plateau(radius / 2.0**k) - plateau(radius / 2.0 ** (k - 1))


def shell_mask(grid: GridSpec, k: int) -> BoolArray:
    """
    Mark the dyadic shell 2^(k-1) <= |xi| <= 2^(k+1).

    Args:
        grid: Lattice description.
        k: Shell index.

    Returns:
        BoolArray: Shell mask.

    """
    radius = frequency_norm(grid)
    return (radius >= 2.0 ** (k - 1)) & (radius <= 2.0 ** (k + 1))


@dataclass(frozen=True, slots=True, eq=False)
class LittlewoodPaleyBank:
    """
    Dyadic partition psi_0, ..., psi_K with low-pass q(xi) = Phi(|xi| / 2).

    Attributes:
        grid: Lattice description.
        shells: Tabulated psi_k for k = 0..K, with 2^K above the lattice corner.
        low_pass: Tabulated q, equal to 1 on |xi| <= 2 and 0 on |xi| >= 4.

    """

    grid: GridSpec
    shells: tuple[MultiplierSpec, ...]
    low_pass: MultiplierSpec

    @property
    def top_index(self) -> int:
        """Largest shell index K."""
        return len(self.shells) - 1

    def shell(self, k: int) -> MultiplierSpec:
        """
        Return psi_k.

        Args:
            k: Shell index in [0, K].

        Returns:
            MultiplierSpec: Shell symbol.

        """
        return self.shells[k]

    def partition_residual(self) -> float:
        """
        Return max |sum_k psi_k - 1| over |xi| >= 1.

        Returns:
            float: Partition-of-unity residual.

        """
        total = sum(shell.values.real for shell in self.shells)
        outside = frequency_norm(self.grid) >= 1.0
        return float(np.abs(np.asarray(total)[outside] - 1.0).max())


def littlewood_paley(grid: GridSpec) -> LittlewoodPaleyBank:
    """
    Build the smooth dyadic partition up to the lattice corner.

    Args:
        grid: Lattice description.

    Returns:
        LittlewoodPaleyBank: Shell symbols and the low-pass symbol.

    """
    corner = grid.nyquist * math.sqrt(grid.dim)
    top = max(1, math.ceil(math.log2(corner)))
    shells = tuple(
        MultiplierSpec(grid, shell_symbol(grid, k), f"shell_{k}", radial=True)
        for k in range(top + 1)
    )
    low_pass = MultiplierSpec(
        grid,
        plateau(frequency_norm(grid) / 2.0),
        "low_pass",
        radial=True,
    )
    return LittlewoodPaleyBank(grid=grid, shells=shells, low_pass=low_pass)
