"""Operator application, time grids and maximal functions."""

from .decomposition import split_half_waves
from .families import ComplexMeanFamily, HalfWaveFamily, SphericalFamily
from .interfaces import TimeFamily
from .maximal import convergence_profile, local_smoothing_norm, maximal_function
from .models import ConvergencePoint, MaximalField, TimeGrid
from .operators import (
    apply_multiplier,
    ball_average,
    complex_mean,
    evaluate_on_points,
    half_wave,
    sparse_spectrum,
    spherical_mean,
)

__all__ = [
    "ComplexMeanFamily",
    "ConvergencePoint",
    "HalfWaveFamily",
    "MaximalField",
    "SphericalFamily",
    "TimeFamily",
    "TimeGrid",
    "apply_multiplier",
    "ball_average",
    "complex_mean",
    "convergence_profile",
    "evaluate_on_points",
    "half_wave",
    "local_smoothing_norm",
    "maximal_function",
    "sparse_spectrum",
    "spherical_mean",
    "split_half_waves",
]
