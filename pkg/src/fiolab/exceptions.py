"""Typed exception hierarchy used across fiolab modules."""


class FioLabError(Exception):
    """Base exception for fiolab."""


class FioLabConfigurationError(FioLabError):
    """Raised when settings or experiment configuration are invalid."""

    @classmethod
    def invalid_time_resolution(cls) -> "FioLabConfigurationError":
        """Build error for a time-resolution constant outside (0, 1/4]."""
        return cls("time_resolution must be in (0, 0.25]")

    @classmethod
    def invalid_fft_workers(cls) -> "FioLabConfigurationError":
        """Build error for non-positive FFT worker count."""
        return cls("fft_workers must be > 0")

    @classmethod
    def invalid_max_workers(cls) -> "FioLabConfigurationError":
        """Build error for non-positive thread-pool size."""
        return cls("max_workers must be > 0")

    @classmethod
    def invalid_quadrature_oversampling(cls) -> "FioLabConfigurationError":
        """Build error for direction-grid oversampling below 2."""
        return cls("quadrature_oversampling must be >= 2")

    @classmethod
    def invalid_tolerance(cls, name: str) -> "FioLabConfigurationError":
        """Build error for a non-positive tolerance setting."""
        return cls(f"{name} must be > 0")

    @classmethod
    def unreadable_config(cls, path: str, reason: str) -> "FioLabConfigurationError":
        """Build error for a config document that cannot be read or parsed."""
        return cls(f"cannot load experiment config {path}: {reason}")

    @classmethod
    def kind_mismatch(cls, expected: str, found: str) -> "FioLabConfigurationError":
        """Build error for a config whose kind disagrees with the CLI subcommand."""
        return cls(f"config kind {found!r} does not match subcommand kind {expected!r}")

    @classmethod
    def invalid_seed(cls) -> "FioLabConfigurationError":
        """Build error for a seed outside the unsigned 64-bit range."""
        return cls("seed must be an unsigned 64-bit integer")

    @classmethod
    def missing_kind(cls) -> "FioLabConfigurationError":
        """Build error for a config run without an experiment kind."""
        return cls("experiment config does not name a kind")

    @classmethod
    def invalid_window(
        cls,
        family: str,
        t_min: float,
        t_max: float,
    ) -> "FioLabConfigurationError":
        """Build error for a time window whose ends are out of order."""
        return cls(f"time window [{t_min}, {t_max}] of {family} is empty")

    @classmethod
    def calibration_shell_too_high(
        cls,
        k: int,
        reach: float,
        nyquist: float,
    ) -> "FioLabConfigurationError":
        """Build error for a calibration shell the grid cannot hold."""
        return cls(
            f"calibration shell k={k} reaches |xi|={reach:.4g}, "
            f"beyond Nyquist {nyquist:.4g}",
        )


class InvalidGridError(FioLabError):
    """Raised when a lattice cannot be built or two lattices disagree."""

    @classmethod
    def unsupported_dimension(cls, dim: int) -> "InvalidGridError":
        """Build error for dimensions other than 2 and 3."""
        return cls(f"dim must be 2 or 3, got {dim}")

    @classmethod
    def not_power_of_two(cls, points: int) -> "InvalidGridError":
        """Build error for a point count that is not a power of two >= 8."""
        return cls(f"points_per_axis must be a power of two >= 8, got {points}")

    @classmethod
    def box_too_small(cls, length: float) -> "InvalidGridError":
        """Build error for a torus side shorter than 8."""
        return cls(f"box_length must be >= 8, got {length}")

    @classmethod
    def mismatch(cls) -> "InvalidGridError":
        """Build error for operands living on different lattices."""
        return cls("operands are defined on different grids")

    @classmethod
    def wrong_shape(
        cls,
        expected: tuple[int, ...],
        found: tuple[int, ...],
    ) -> "InvalidGridError":
        """Build error for sample arrays that do not match the lattice."""
        return cls(f"samples must have shape {expected}, got {found}")

    @classmethod
    def too_large_for_csv(cls, points: int) -> "InvalidGridError":
        """Build error for CSV export of a grid with too many points."""
        return cls(f"CSV export is limited to small grids, got {points} points")


class DomainMismatchError(FioLabError):
    """Raised when a field is in the wrong (space/frequency) domain."""

    @classmethod
    def expected(cls, expected: str, found: str) -> "DomainMismatchError":
        """Build error naming the expected and actual domain tags."""
        return cls(f"expected a {expected}-domain field, got {found}")


class InvalidExponentError(FioLabError):
    """Raised when a Lebesgue exponent is invalid for the requested operation."""

    @classmethod
    def below_one(cls) -> "InvalidExponentError":
        """Build error for p < 1."""
        return cls("p must be >= 1 or 'inf'")

    @classmethod
    def unparsable(cls, value: str) -> "InvalidExponentError":
        """Build error for a string that is not a number or 'inf'."""
        return cls(f"cannot parse exponent {value!r}")

    @classmethod
    def open_range_required(cls) -> "InvalidExponentError":
        """Build error for estimators defined only for 1 < p < inf."""
        return cls(
            "p must lie in the open range (1, inf); use the sup-norm proxy for inf",
        )

    @classmethod
    def above_two_required(cls) -> "InvalidExponentError":
        """Build error for local-smoothing quantities defined for 2 < p < inf."""
        return cls("p must lie in the open range (2, inf)")

    @classmethod
    def dimension_too_small(cls) -> "InvalidExponentError":
        """Build error for exponent tables requested in dimension < 2."""
        return cls("dimension must be >= 2")


class InvalidBesselArgumentError(FioLabError):
    """Raised for Bessel evaluations outside real order >= 0 and argument >= 0."""

    @classmethod
    def negative_order(cls) -> "InvalidBesselArgumentError":
        """Build error for negative order."""
        return cls("Bessel order must be >= 0")

    @classmethod
    def negative_argument(cls) -> "InvalidBesselArgumentError":
        """Build error for negative argument."""
        return cls("Bessel argument must be >= 0")

    @classmethod
    def non_finite(cls) -> "InvalidBesselArgumentError":
        """Build error for NaN or infinite inputs."""
        return cls("Bessel order and argument must be finite")


class InvalidSymbolError(FioLabError):
    """Raised when a phase, amplitude or multiplier description is invalid."""

    @classmethod
    def matrix_required(cls) -> "InvalidSymbolError":
        """Build error for an anisotropic phase without its matrix."""
        return cls("anisotropic_quadratic phase requires a matrix")

    @classmethod
    def matrix_not_spd(cls) -> "InvalidSymbolError":
        """Build error for a phase matrix that is not symmetric positive definite."""
        return cls("phase matrix must be symmetric positive definite")

    @classmethod
    def matrix_shape(cls, dim: int) -> "InvalidSymbolError":
        """Build error for a phase matrix whose size disagrees with the grid."""
        return cls(f"phase matrix must be {dim}x{dim}")

    @classmethod
    def invalid_aperture(cls) -> "InvalidSymbolError":
        """Build error for a cone aperture outside (0, pi)."""
        return cls("cone aperture must lie in (0, pi)")

    @classmethod
    def invalid_axis(cls) -> "InvalidSymbolError":
        """Build error for a cone axis that is not a nonzero vector."""
        return cls("cone axis must be a nonzero vector")

    @classmethod
    def axis_dimension(cls, expected: int, found: int) -> "InvalidSymbolError":
        """Build error for a cone or phase used in the wrong dimension."""
        return cls(f"symbol expects {expected} frequency components, got {found}")

    @classmethod
    def dilation_out_of_range(cls, t: float, limit: float) -> "InvalidSymbolError":
        """Build error for dilations outside (0, L/4]."""
        return cls(f"dilation t={t} must lie in (0, {limit}] for this box")

    @classmethod
    def complex_order(cls) -> "InvalidSymbolError":
        """Build error for complex alpha, which is not supported."""
        return cls("alpha must be real")

    @classmethod
    def order_too_negative(cls, alpha: float) -> "InvalidSymbolError":
        """Build error for alpha giving a negative Bessel order."""
        return cls(f"alpha={alpha} gives a negative Bessel order")

    @classmethod
    def coefficient_required(cls) -> "InvalidSymbolError":
        """Build error for a polyhomogeneous amplitude without coefficient."""
        return cls("polyhomogeneous amplitude requires a coefficient")


class UnderResolvedTimeGridError(FioLabError):
    """Raised when a time grid is too coarse for the data's top frequency shell."""

    @classmethod
    def spacing_too_coarse(
        cls,
        spacing: float,
        limit: float,
        shell: int,
    ) -> "UnderResolvedTimeGridError":
        """Build error quoting the spacing and the bound for the shell."""
        return cls(
            f"time spacing {spacing:.3e} exceeds {limit:.3e} "
            f"required for shell k={shell}",
        )

    @classmethod
    def invalid_bounds(cls) -> "UnderResolvedTimeGridError":
        """Build error for an empty or reversed time interval."""
        return cls("time grid needs count >= 1 and t_min <= t_max")


class UnderResolvedFrameError(FioLabError):
    """Raised when a direction frame or quadrature grid cannot resolve the data."""

    @classmethod
    def shell_out_of_range(
        cls,
        k: int,
        dim: int,
        limit: int,
    ) -> "UnderResolvedFrameError":
        """Build error for shells outside the supported frame range."""
        return cls(
            f"frame shell k={k} unsupported in dimension {dim} (1 <= k <= {limit})",
        )

    @classmethod
    def spacing_too_coarse(
        cls,
        spacing: float,
        limit: float,
    ) -> "UnderResolvedFrameError":
        """Build error for a direction quadrature coarser than the top shell allows."""
        return cls(f"direction spacing {spacing:.3e} exceeds {limit:.3e}")


class SupportViolationError(FioLabError):
    """Raised when a field's spectrum leaves the declared dyadic shell."""

    @classmethod
    def outside_shell(cls, k: int, fraction: float) -> "SupportViolationError":
        """Build error reporting the spectral energy outside the shell."""
        return cls(f"{fraction:.3e} of the energy lies outside shell k={k}")


class PacketConstructionError(FioLabError):
    """Raised when a wave packet, Knapp sum or tube cannot be built."""

    @classmethod
    def shell_too_high(
        cls,
        k: int,
        radius: float,
        nyquist: float,
    ) -> "PacketConstructionError":
        """Build error for packets whose spectrum reaches the Nyquist frequency."""
        return cls(
            f"shell k={k} reaches |xi|={radius:.1f} beyond Nyquist {nyquist:.1f}",
        )

    @classmethod
    def invalid_envelope(cls) -> "PacketConstructionError":
        """Build error for an envelope radius outside (0, 1/3]."""
        return cls("envelope radius must lie in (0, 1/3]")

    @classmethod
    def empty_cone(cls, k: int) -> "PacketConstructionError":
        """Build error for a Knapp cone containing no frame direction."""
        return cls(f"no frame direction of shell k={k} lies in the cone")

    @classmethod
    def invalid_theta(cls) -> "PacketConstructionError":
        """Build error for a tube parameter outside (0, 1/2]."""
        return cls("theta must lie in (0, 0.5]")

    @classmethod
    def not_translation_invariant(cls) -> "PacketConstructionError":
        """Build error for phases without a usable flow direction."""
        return cls("flow checks need a translation-invariant phase with nonzero speed")

    @classmethod
    def direction_dimension(cls, dim: int) -> "PacketConstructionError":
        """Build error for a direction vector of the wrong size."""
        return cls(f"direction must have {dim} components")

    @classmethod
    def zero_direction(cls) -> "PacketConstructionError":
        """Build error for a packet direction that cannot be normalized."""
        return cls("packet direction must be a nonzero vector")


class FitError(FioLabError):
    """Raised when a log-log slope fit cannot be computed."""

    @classmethod
    def too_few_rows(cls, count: int) -> "FitError":
        """Build error for fits with fewer than four rows."""
        return cls(f"slope fit needs at least 4 rows, got {count}")

    @classmethod
    def nonpositive_value(cls) -> "FitError":
        """Build error for values that cannot be log-transformed."""
        return cls("slope fit needs strictly positive values")


class ReportFormatError(FioLabError):
    """Raised when a stored report or field cannot be read back."""

    @classmethod
    def missing_columns(cls, columns: list[str]) -> "ReportFormatError":
        """Build error for a CSV lacking required columns."""
        return cls(f"report CSV is missing columns: {', '.join(columns)}")

    @classmethod
    def empty_report(cls) -> "ReportFormatError":
        """Build error for a CSV without data rows."""
        return cls("report CSV has no rows")

    @classmethod
    def bad_header(cls) -> "ReportFormatError":
        """Build error for a field binary with an unknown header."""
        return cls("field binary header is malformed")

    @classmethod
    def truncated(cls) -> "ReportFormatError":
        """Build error for a field binary shorter than its header announces."""
        return cls("field binary payload is truncated")

    @classmethod
    def malformed_value(cls, path: str, reason: str) -> "ReportFormatError":
        """Build error for a report cell that cannot be parsed."""
        return cls(f"report {path} holds a malformed value: {reason}")
