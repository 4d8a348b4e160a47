"""Bessel functions of the first kind for real order."""

from .bessel import (
    bessel_asymptotic,
    bessel_j,
    bessel_j_values,
    bessel_limit_ratio,
    bessel_regime,
    bessel_series,
    evaluate_bessel,
)
from .models import BesselEval, BesselMethod

__all__ = [
    "BesselEval",
    "BesselMethod",
    "bessel_asymptotic",
    "bessel_j",
    "bessel_j_values",
    "bessel_limit_ratio",
    "bessel_regime",
    "bessel_series",
    "evaluate_bessel",
]
