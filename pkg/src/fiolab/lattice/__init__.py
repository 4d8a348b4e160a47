"""Periodic lattice, fields, transforms and norms."""

from .field import Field, constant_field, delta, from_function, plane_wave, zeros
from .grid import (
    GridSpec,
    axis_frequencies,
    centered_offsets,
    coordinates,
    frequency_axes,
    frequency_norm,
    make_grid,
    nyquist_mask,
    radial_index,
)
from .norms import (
    boundary_leakage,
    energy_outside,
    lp_norm,
    max_frequency,
    spectral_l2_norm,
    top_shell,
)
from .transforms import dft_forward, dft_inverse, filter_field
from .types import BoolArray, ComplexArray, DomainTag, RealArray

__all__ = [
    "BoolArray",
    "ComplexArray",
    "DomainTag",
    "Field",
    "GridSpec",
    "RealArray",
    "axis_frequencies",
    "boundary_leakage",
    "centered_offsets",
    "constant_field",
    "coordinates",
    "delta",
    "dft_forward",
    "dft_inverse",
    "energy_outside",
    "filter_field",
    "frequency_axes",
    "frequency_norm",
    "from_function",
    "lp_norm",
    "make_grid",
    "max_frequency",
    "nyquist_mask",
    "plane_wave",
    "radial_index",
    "spectral_l2_norm",
    "top_shell",
    "zeros",
]
