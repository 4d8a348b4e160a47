"""Exact exponent arithmetic for fixed-time, local-smoothing and maximal estimates."""

from dataclasses import dataclass
from fractions import Fraction

from fiolab.exceptions import InvalidExponentError
from fiolab.exponent import LebesgueExponent

HALF = Fraction(1, 2)
MIN_DIMENSION = 2


@dataclass(frozen=True, slots=True)
class ExponentTable:
    """
    Exponents attached to a dimension n and a Lebesgue exponent p.

    Attributes:
        n: Spatial dimension, at least 2.
        p: Lebesgue exponent.
        s_p: Fixed-time loss (n-1)/2 * |1/2 - 1/p|.
        d_p: Local-smoothing exponent: s_p - 1/p above the threshold, 0 between
            2 and the threshold, s_p below 2.
        threshold_p: 2(n+1)/(n-1).

    """

    n: int
    p: LebesgueExponent
    s_p: Fraction
    d_p: Fraction
    threshold_p: Fraction

    @property
    def reciprocal(self) -> Fraction:
        """1/p, zero for p = inf."""
        return self.p.reciprocal()

    @property
    def critical_p(self) -> Fraction:
        """2n/(n-1), where the combined lower bound changes branch."""
        return Fraction(2 * self.n, self.n - 1)

    @property
    def maximal_target(self) -> Fraction:
        """Smoothness d(p) + 1/p sufficient for the half-wave maximal bound."""
        return self.d_p + self.reciprocal

    @property
    def hypersurface_target(self) -> Fraction:
        """Smoothness d(p) + 1/p - (n-1)/2 that suffices for the spherical maximum."""
        return self.maximal_target - Fraction(self.n - 1, 2)

    @property
    def non_curved_target(self) -> Fraction:
        """Smoothness s(p) + 1/p sufficient without any curvature assumption."""
        return self.s_p + self.reciprocal

    @property
    def fixed_time_lower(self) -> Fraction:
        """Single-time necessary smoothness s(p)."""
        return self.s_p

    @property
    def maximal_lower(self) -> Fraction:
        """Necessary smoothness s(p) + 1/p of the maximal bound, used for p <= 2."""
        return self.s_p + self.reciprocal

    @property
    def combined_lower(self) -> Fraction:
        """Best known necessary smoothness across the whole range of p."""
        if self.reciprocal >= HALF:
            return self.s_p + self.reciprocal
        if self.reciprocal >= 1 / self.critical_p:
            return self.reciprocal - self.s_p
        return self.s_p

    def complex_mean_target(self, alpha: float) -> float:
        """
        Return the smoothness d(p) + 1/p - (n-1)/2 - alpha sufficient for M^alpha.

        Args:
            alpha: Real order of the complex spherical mean.

        Returns:
            float: Target smoothness.

        """
        return float(self.hypersurface_target) - alpha

    def in_open_range(self) -> bool:
        """
        Tell whether 2 < p < 2(n+1)/(n-1), where sharpness is not known.

        Returns:
            bool: ``True`` strictly inside the intermediate range.

        """
        return 1 / self.threshold_p < self.reciprocal < HALF


def exponents(n: int, p: LebesgueExponent | float | str | Fraction) -> ExponentTable:
    """
    Evaluate s(p), d(p) and the threshold exactly.

    Args:
        n: Spatial dimension, at least 2.
        p: Exponent in [1, inf].

    Returns:
        ExponentTable: Exact exponent table.

    Raises:
        InvalidExponentError: If n < 2 or p is invalid.

    """
    if n < MIN_DIMENSION:
        raise InvalidExponentError.dimension_too_small()
    exponent = LebesgueExponent.parse(p)
    reciprocal = exponent.reciprocal()
    s_p = Fraction(n - 1, 2) * abs(HALF - reciprocal)
    threshold = Fraction(2 * (n + 1), n - 1)
    if reciprocal <= 1 / threshold:
        d_p = s_p - reciprocal
    elif reciprocal <= HALF:
        d_p = Fraction(0)
    else:
        d_p = s_p
    return ExponentTable(n=n, p=exponent, s_p=s_p, d_p=d_p, threshold_p=threshold)
