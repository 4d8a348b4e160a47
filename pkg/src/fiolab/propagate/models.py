"""Time grids and maximal-function results."""

import math
from dataclasses import dataclass

import numpy as np

from fiolab.exceptions import UnderResolvedTimeGridError
from fiolab.lattice.field import Field
from fiolab.lattice.grid import GridSpec
from fiolab.lattice.norms import lp_norm, top_shell
from fiolab.lattice.types import RealArray

DEFAULT_TIME_RESOLUTION = 0.25
RESOLUTION_SLACK = 1e-12


@dataclass(frozen=True, slots=True)
class TimeGrid:
    """
    Uniform samples t_min, ..., t_max.

    Attributes:
        t_min: First sample.
        t_max: Last sample.
        count: Number of samples, at least 1.

    """

    t_min: float
    t_max: float
    count: int

    def __post_init__(self) -> None:
        """
        Validate the interval.

        Raises:
            UnderResolvedTimeGridError: If the interval is empty or reversed.

        """
        if self.count < 1 or not self.t_min <= self.t_max:
            raise UnderResolvedTimeGridError.invalid_bounds()
        if self.count == 1 and self.t_min != self.t_max:
            raise UnderResolvedTimeGridError.invalid_bounds()

    @classmethod
    def single(cls, t: float) -> "TimeGrid":
        """
        Build the one-sample grid {t}.

        Args:
            t: The only time.

        Returns:
            TimeGrid: Single-sample grid.

        """
        return cls(t_min=t, t_max=t, count=1)

    @classmethod
    def for_shell(
        cls,
        shell: int,
        t_min: float,
        t_max: float,
        time_resolution: float = DEFAULT_TIME_RESOLUTION,
    ) -> "TimeGrid":
        """
        Build the coarsest grid on [t_min, t_max] resolving frequency shell k.

        Args:
            shell: Top shell index of the data.
            t_min: First sample.
            t_max: Last sample.
            time_resolution: Constant c0 of the rule dt <= c0 2^-k.

        Returns:
            TimeGrid: Resolved grid.

        """
        if t_min == t_max:
            return cls.single(t_min)
        limit = time_resolution * 2.0**-shell
        count = math.ceil((t_max - t_min) / limit - RESOLUTION_SLACK) + 1
        return cls(t_min=t_min, t_max=t_max, count=count)

    @classmethod
    def for_field(
        cls,
        field: Field,
        t_min: float,
        t_max: float,
        time_resolution: float = DEFAULT_TIME_RESOLUTION,
    ) -> "TimeGrid":
        """
        Build the coarsest grid on [t_min, t_max] resolving the field's top shell.

        Args:
            field: Data the grid will be used with.
            t_min: First sample.
            t_max: Last sample.
            time_resolution: Constant c0 of the rule dt <= c0 2^-k.

        Returns:
            TimeGrid: Resolved grid.

        """
        return cls.for_shell(top_shell(field), t_min, t_max, time_resolution)

    @property
    def samples(self) -> RealArray:
        """Sample times in increasing order."""
        return np.linspace(self.t_min, self.t_max, self.count)

    @property
    def spacing(self) -> float:
        """Distance between consecutive samples, 0 for a single sample."""
        if self.count == 1:
            return 0.0
        return (self.t_max - self.t_min) / (self.count - 1)

    def refined(self, factor: int) -> "TimeGrid":
        """
        Return the grid with ``factor`` times smaller spacing.

        Args:
            factor: Positive refinement factor.

        Returns:
            TimeGrid: Refined grid containing every original sample.

        """
        return TimeGrid(self.t_min, self.t_max, (self.count - 1) * factor + 1)

    def check_resolution(
        self,
        shell: int,
        time_resolution: float = DEFAULT_TIME_RESOLUTION,
    ) -> None:
        """
        Enforce dt <= c0 2^-k.

        Args:
            shell: Top shell index of the data.
            time_resolution: Constant c0.

        Raises:
            UnderResolvedTimeGridError: If the spacing is too coarse.

        """
        limit = time_resolution * 2.0**-shell
        if self.spacing > limit * (1 + RESOLUTION_SLACK):
            raise UnderResolvedTimeGridError.spacing_too_coarse(
                self.spacing,
                limit,
                shell,
            )


@dataclass(frozen=True, slots=True, eq=False)
class MaximalField:
    """
    Pointwise maximum of |T_t f| over a time grid.

    Attributes:
        grid: Lattice description.
        values: Nonnegative maxima.
        argmax_t: Smallest sample time attaining each maximum.

    """

    grid: GridSpec
    values: RealArray
    argmax_t: RealArray

    def as_field(self) -> Field:
        """
        Return the maxima as a space-domain field.

        Returns:
            Field: Real nonnegative field.

        """
        return Field(self.grid, self.values)

    def norm(self, p: object) -> float:
        """
        Return the L^p norm of the maxima.

        Args:
            p: Exponent accepted by ``lp_norm``.

        Returns:
            float: Norm of the maximal function.

        """
        return lp_norm(self.as_field(), p)  # type: ignore[arg-type]


@dataclass(frozen=True, slots=True)
class ConvergencePoint:
    """
    One row of a convergence profile.

    Attributes:
        delta: Window length.
        value: ||sup_{0 < t <= delta} |T_t f - f| ||_p.
        samples: Number of time samples used in the window.

    """

    delta: float
    value: float
    samples: int
