"""Exponent arithmetic, phases, amplitudes and tabulated multipliers."""

from .amplitudes import AmplitudeSpec, conic_cutoff, symbol_bound_constant
from .bumps import cap_bump, plateau, smooth_step
from .cones import ConeSpec
from .exponents import ExponentTable, exponents
from .multipliers import (
    LittlewoodPaleyBank,
    MultiplierSpec,
    ball_average_multiplier,
    bessel_potential,
    check_dilation,
    complex_mean_multiplier,
    half_wave_multiplier,
    identity_multiplier,
    littlewood_paley,
    shell_mask,
    shell_symbol,
    spherical_multiplier,
    tabulate_radial,
)
from .phases import PhaseSpec
from .radial import (
    ball_average_profile,
    ball_volume,
    complex_mean_profile,
    sphere_area,
    sphere_profile,
    sphere_ratio,
)

__all__ = [
    "AmplitudeSpec",
    "ConeSpec",
    "ExponentTable",
    "LittlewoodPaleyBank",
    "MultiplierSpec",
    "PhaseSpec",
    "ball_average_multiplier",
    "ball_average_profile",
    "ball_volume",
    "bessel_potential",
    "cap_bump",
    "check_dilation",
    "complex_mean_multiplier",
    "complex_mean_profile",
    "conic_cutoff",
    "exponents",
    "half_wave_multiplier",
    "identity_multiplier",
    "littlewood_paley",
    "plateau",
    "shell_mask",
    "shell_symbol",
    "smooth_step",
    "sphere_area",
    "sphere_profile",
    "sphere_ratio",
    "spherical_multiplier",
    "symbol_bound_constant",
    "tabulate_radial",
]
