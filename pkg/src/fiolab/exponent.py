"""Lebesgue exponent value object used across fiolab modules."""

import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import InvalidExponentError

INFINITY_LABELS = frozenset({"inf", "infinity", "∞"})
FLOAT_DENOMINATOR_LIMIT = 10**6
DECIMAL_PRIMES = (2, 5)


@dataclass(frozen=True, slots=True)
class LebesgueExponent:
    """
    Value object for an exponent p in [1, inf], kept exact.

    Finite exponents are stored as fractions so that branch boundaries such as
    p = 2(n+1)/(n-1) are decided exactly; ``None`` stands for p = inf.

    Attributes:
        _value: Exact finite value, or ``None`` for infinity.

    """

    _value: Fraction | None

    def __post_init__(self) -> None:
        """
        Validate the exponent range.

        Raises:
            InvalidExponentError: If the value is below 1.

        """
        if self._value is not None and self._value < 1:
            raise InvalidExponentError.below_one()

    @classmethod
    def parse(
        cls,
        value: "str | float | Fraction | LebesgueExponent",
    ) -> "LebesgueExponent":
        """
        Parse an exponent from text, a number or a fraction.

        Args:
            value: ``"inf"``, a decimal or ``a/b`` string, a number, or an exponent.

        Returns:
            LebesgueExponent: Parsed exponent.

        Raises:
            InvalidExponentError: If the value is not a number >= 1 or infinity.

        """
        if isinstance(value, LebesgueExponent):
            return value
        if isinstance(value, Fraction):
            return cls(value)
        if isinstance(value, str):
            text = value.strip().lower()
            if text in INFINITY_LABELS:
                return cls(None)
            try:
                return cls(Fraction(text))
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidExponentError.unparsable(value) from exc
        if isinstance(value, bool):
            raise InvalidExponentError.unparsable(str(value))
        if isinstance(value, int):
            return cls(Fraction(value))
        if math.isinf(value) and value > 0:
            return cls(None)
        if not math.isfinite(value):
            raise InvalidExponentError.unparsable(str(value))
        return cls(Fraction(value).limit_denominator(FLOAT_DENOMINATOR_LIMIT))

    @classmethod
    def infinity(cls) -> "LebesgueExponent":
        """
        Return the exponent p = inf.

        Returns:
            LebesgueExponent: The infinite exponent.

        """
        return cls(None)

    def is_infinite(self) -> bool:
        """
        Tell whether this is p = inf.

        Returns:
            bool: ``True`` for the infinite exponent.

        """
        return self._value is None

    def reciprocal(self) -> Fraction:
        """
        Return 1/p exactly (zero for p = inf).

        Returns:
            Fraction: The reciprocal exponent.

        """
        if self._value is None:
            return Fraction(0)
        return 1 / self._value

    def as_fraction(self) -> Fraction | None:
        """
        Return the exact finite value.

        Returns:
            Fraction | None: The value, or ``None`` for p = inf.

        """
        return self._value

    def as_float(self) -> float:
        """
        Return p as a float (``math.inf`` for the infinite exponent).

        Returns:
            float: Floating-point value of p.

        """
        if self._value is None:
            return math.inf
        return float(self._value)

    def label(self) -> str:
        """
        Return a compact label usable in file names.

        Returns:
            str: ``"inf"``, a decimal, or ``a-over-b`` for non-decimal fractions.

        """
        return str(self).replace("/", "-over-")

    def __str__(self) -> str:
        """
        Return the canonical text form.

        Returns:
            str: ``"inf"``, an integer, a terminating decimal, or ``a/b``.

        """
        if self._value is None:
            return "inf"
        if self._value.denominator == 1:
            return str(self._value.numerator)
        denominator = self._value.denominator
        for prime in DECIMAL_PRIMES:
            while denominator % prime == 0:
                denominator //= prime
        if denominator == 1:
            return repr(float(self._value))
        return f"{self._value.numerator}/{self._value.denominator}"

    def __repr__(self) -> str:
        """
        Return debug representation.

        Returns:
            str: ``LebesgueExponent('p')`` representation.

        """
        return f"LebesgueExponent('{self}')"
