"""Pydantic schema of experiment configuration documents."""

import math
from pathlib import Path
from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from fiolab.exceptions import FioLabConfigurationError, InvalidExponentError
from fiolab.exponent import LebesgueExponent
from fiolab.lattice.grid import GridSpec, make_grid
from fiolab.packets.flow import CALIBRATION_SHELL
from fiolab.packets.models import (
    DEFAULT_ENVELOPE,
    DEFAULT_KNAPP_APERTURE,
    WavePacketSpec,
)
from fiolab.packets.synthesis import packet_reach
from fiolab.symbols.amplitudes import AmplitudeSpec
from fiolab.symbols.phases import PhaseSpec

from .fitting import MIN_FIT_ROWS
from .types import ExperimentKind, MeanFamily, WitnessKind

MAX_SEED = 2**64 - 1
FAMILY_WINDOWS: dict[MeanFamily, tuple[float, float]] = {
    "sphere": (1.0, 2.0),
    "complex": (1.0, 2.0),
    "half_wave": (0.0, 1.0),
}


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class GridConfig(_Strict):
    """Periodic lattice of the run."""

    dim: int = 2
    points_per_axis: int = 1024
    box_length: float = 8.0

    def build(self) -> GridSpec:
        """
        Build the lattice.

        Returns:
            GridSpec: Validated grid description.

        """
        return make_grid(self.dim, self.points_per_axis, self.box_length)


class TimePolicy(_Strict):
    """
    Time windows and resolution used by maximal functions and convergence runs.

    Left unset, ``t_min`` and ``t_max`` fall back to the window of each operator
    family: [1, 2] for spherical and complex means, [0, 1] for the half-wave group.
    A value that is set replaces that end for every family.
    """

    t_min: float | None = Field(default=None, ge=0)
    t_max: float | None = Field(default=None, gt=0)
    t_fixed: float = 0.0
    flow_horizon: float = Field(default=0.5, gt=0)
    resolution: float = Field(default=0.25, gt=0, le=0.25)
    deltas: list[float] = Field(
        default_factory=lambda: [2.0**-j for j in range(6, 11)],
        min_length=MIN_FIT_ROWS,
    )
    flow_samples: int = Field(default=9, ge=2)

    @model_validator(mode="after")
    def _check_overrides(self) -> Self:
        if (
            self.t_min is not None
            and self.t_max is not None
            and self.t_min > self.t_max
        ):
            msg = f"t_min={self.t_min} exceeds t_max={self.t_max}"
            raise ValueError(msg)
        return self

    def window(self, family: MeanFamily) -> tuple[float, float]:
        """
        Return the time window of a family, with config overrides applied.

        Args:
            family: Operator family name.

        Returns:
            tuple[float, float]: Window ends t_min <= t_max.

        Raises:
            FioLabConfigurationError: If an override leaves the window empty.

        """
        default_min, default_max = FAMILY_WINDOWS[family]
        t_min = default_min if self.t_min is None else self.t_min
        t_max = default_max if self.t_max is None else self.t_max
        if t_min > t_max:
            raise FioLabConfigurationError.invalid_window(family, t_min, t_max)
        return t_min, t_max


class PhaseConfig(_Strict):
    """Phase function phi of the half-wave family."""

    form: Literal["euclidean", "diagonal", "anisotropic"] = "euclidean"
    entries: list[float] | None = None
    matrix: list[list[float]] | None = None

    def build(self) -> PhaseSpec:
        """
        Build the phase.

        Returns:
            PhaseSpec: Validated phase.

        Raises:
            InvalidSymbolError: If the required matrix data is missing or invalid.

        """
        if self.form == "diagonal":
            return PhaseSpec.diagonal(self.entries or [])
        if self.form == "anisotropic":
            return PhaseSpec.anisotropic(self.matrix or [])
        return PhaseSpec.euclidean()


class AmplitudeConfig(_Strict):
    """Amplitude a of the half-wave family."""

    form: Literal["one", "polyhomogeneous"] = "one"
    order: float = 0.0
    coefficient: float = 1.0

    def build(self) -> AmplitudeSpec:
        """
        Build the amplitude.

        Returns:
            AmplitudeSpec: Amplitude of the configured form.

        """
        if self.form == "polyhomogeneous":
            return AmplitudeSpec.polyhomogeneous(self.order, self.coefficient)
        return AmplitudeSpec.one()


class PacketsConfig(_Strict):
    """Witness ensemble drawn at every shell."""

    envelope: float = Field(default=DEFAULT_ENVELOPE, gt=0, le=1 / 3)
    aperture: float = Field(default=DEFAULT_KNAPP_APERTURE, gt=0, le=math.pi)
    axis: list[float] | None = None
    witnesses: list[WitnessKind] = Field(
        default_factory=lambda: ["packet", "knapp"],
        min_length=1,
    )
    theta: float | None = Field(default=None, gt=0, le=0.5)
    calibration_shell: int = Field(default=CALIBRATION_SHELL, ge=1)

    def direction(self, dim: int) -> tuple[float, ...]:
        """
        Return the packet axis, e_1 when none is configured.

        Args:
            dim: Spatial dimension.

        Returns:
            tuple[float, ...]: Axis components.

        """
        if self.axis is not None:
            return tuple(self.axis)
        return tuple(1.0 if i == 0 else 0.0 for i in range(dim))

    def calibration_packet(self, grid: GridSpec) -> WavePacketSpec:
        """
        Return the packet that fixes theta, whatever the swept shells are.

        Args:
            grid: Lattice of the run.

        Returns:
            WavePacketSpec: Packet at the calibration shell.

        Raises:
            FioLabConfigurationError: If the shell does not fit below Nyquist.

        """
        spec = WavePacketSpec(
            k=self.calibration_shell,
            direction=self.direction(grid.dim),
            envelope=self.envelope,
        )
        reach = packet_reach(spec)
        if reach >= grid.nyquist:
            raise FioLabConfigurationError.calibration_shell_too_high(
                spec.k,
                reach,
                grid.nyquist,
            )
        return spec


class ExperimentConfig(_Strict):
    """
    Complete description of one experiment run.

    Two runs with equal configs write byte-identical CSV reports.
    """

    kind: ExperimentKind | None = None
    grid: GridConfig = Field(default_factory=GridConfig)
    p_values: list[float | str] = Field(default_factory=lambda: ["2"], min_length=1)
    s_values: list[float] = Field(default_factory=list)
    epsilon: float = 0.1
    k_min: int = Field(default=3, ge=1)
    k_max: int = 8
    time: TimePolicy = Field(default_factory=TimePolicy)
    phase: PhaseConfig = Field(default_factory=PhaseConfig)
    amplitude: AmplitudeConfig = Field(default_factory=AmplitudeConfig)
    families: list[MeanFamily] = Field(
        default_factory=lambda: ["half_wave", "sphere", "complex"],
        min_length=1,
    )
    alpha: float = 1.0
    packets: PacketsConfig = Field(default_factory=PacketsConfig)
    estimator: Literal["packet", "quadrature"] = "packet"
    radii: list[float] = Field(
        default_factory=lambda: [0.5, 1.0, 1.5, 2.0],
        min_length=MIN_FIT_ROWS,
    )
    oracle_fields: int = Field(default=3, ge=1)
    norm_tolerance: float = Field(default=0.15, gt=0)
    maximal_tolerance: float = Field(default=0.2, gt=0)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    output_dir: Path = Path("reports")

    @model_validator(mode="after")
    def _check_ranges(self) -> Self:
        if self.k_max - self.k_min + 1 < MIN_FIT_ROWS:
            msg = f"k-range {self.k_min}..{self.k_max} holds fewer than 4 shells"
            raise ValueError(msg)
        for value in self.p_values:
            try:
                LebesgueExponent.parse(value)
            except InvalidExponentError as exc:
                raise ValueError(str(exc)) from exc
        return self

    @property
    def shells(self) -> list[int]:
        """Shell indices k_min..k_max."""
        return list(range(self.k_min, self.k_max + 1))

    @property
    def exponents(self) -> list[LebesgueExponent]:
        """Parsed exponents in document order."""
        return [LebesgueExponent.parse(value) for value in self.p_values]

    def resolved(
        self,
        kind: ExperimentKind,
        *,
        seed: int | None = None,
        output_dir: Path | None = None,
    ) -> "ExperimentConfig":
        """
        Fix the kind and apply command-line overrides.

        Args:
            kind: Kind demanded by the caller.
            seed: Seed override.
            output_dir: Output directory override.

        Returns:
            ExperimentConfig: Validated copy.

        Raises:
            FioLabConfigurationError: If the document names another kind or the seed
                is out of range.

        """
        if self.kind is not None and self.kind != kind:
            raise FioLabConfigurationError.kind_mismatch(kind, self.kind)
        if seed is not None and not 0 <= seed <= MAX_SEED:
            raise FioLabConfigurationError.invalid_seed()
        update: dict[str, object] = {"kind": kind}
        if seed is not None:
            update["seed"] = seed
        if output_dir is not None:
            update["output_dir"] = output_dir
        return self.model_copy(update=update)


def load_config(path: Path) -> ExperimentConfig:
    """
    Read and validate a JSON experiment document.

    Args:
        path: Location of the document.

    Returns:
        ExperimentConfig: Parsed configuration.

    Raises:
        FioLabConfigurationError: If the file cannot be read or fails validation.

    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FioLabConfigurationError.unreadable_config(str(path), str(exc)) from exc
    try:
        return ExperimentConfig.model_validate_json(text)
    except ValidationError as exc:
        raise FioLabConfigurationError.unreadable_config(str(path), str(exc)) from exc
