"""Specifications and results for packets, Knapp sums, flows and tubes."""

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from fiolab.exceptions import PacketConstructionError
from fiolab.lattice.field import Field
from fiolab.lattice.grid import GridSpec, coordinates
from fiolab.lattice.types import BoolArray, RealArray

DEFAULT_ENVELOPE = 0.125
MAX_ENVELOPE = 1 / 3
DEFAULT_KNAPP_APERTURE = math.pi / 6
MAX_THETA = 0.5


def _unit(direction: Sequence[float]) -> tuple[float, ...]:
    vector = np.asarray(direction, dtype=np.float64)
    length = float(np.linalg.norm(vector))
    if vector.ndim != 1 or length == 0.0 or not math.isfinite(length):
        raise PacketConstructionError.zero_direction()
    return tuple(float(v) for v in vector / length)


@dataclass(frozen=True, slots=True)
class WavePacketSpec:
    """
    Knapp wave packet f_nu at shell k.

    Attributes:
        k: Shell index.
        direction: Unit direction nu, normalized on construction.
        envelope: Radius c of the envelope spectrum, in (0, 1/3].
        center: Spatial center; the box center when omitted.

    """

    k: int
    direction: tuple[float, ...]
    envelope: float = DEFAULT_ENVELOPE
    center: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        """
        Normalize the direction and validate the envelope.

        Raises:
            PacketConstructionError: If the direction is zero or c is out of range.

        """
        if not 0 < self.envelope <= MAX_ENVELOPE:
            raise PacketConstructionError.invalid_envelope()
        object.__setattr__(self, "direction", _unit(self.direction))

    @property
    def dim(self) -> int:
        """Number of direction components."""
        return len(self.direction)

    def centered_on(self, grid: GridSpec) -> tuple[float, ...]:
        """
        Return the packet center, defaulting to the box center.

        Args:
            grid: Lattice description.

        Returns:
            tuple[float, ...]: Center coordinates.

        """
        return self.center if self.center is not None else grid.center


@dataclass(frozen=True, slots=True)
class KnappSpec:
    """
    Sum of packets over the frame directions inside a cone.

    Attributes:
        k: Shell index.
        axis: Cone axis, normalized on construction.
        aperture: Half-aperture of the cone in radians.
        envelope: Envelope radius shared by every packet.
        center: Common spatial center; the box center when omitted.

    """

    k: int
    axis: tuple[float, ...]
    aperture: float = DEFAULT_KNAPP_APERTURE
    envelope: float = DEFAULT_ENVELOPE
    center: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        """
        Normalize the axis and validate the envelope.

        Raises:
            PacketConstructionError: If the axis is zero or c is out of range.

        """
        if not 0 < self.envelope <= MAX_ENVELOPE:
            raise PacketConstructionError.invalid_envelope()
        object.__setattr__(self, "axis", _unit(self.axis))

    def packet(self, direction: Sequence[float]) -> WavePacketSpec:
        """
        Return the member packet for one direction.

        Args:
            direction: Frame direction.

        Returns:
            WavePacketSpec: Packet sharing shell, envelope and center.

        """
        return WavePacketSpec(
            k=self.k,
            direction=tuple(direction),
            envelope=self.envelope,
            center=self.center,
        )


@dataclass(frozen=True, slots=True)
class PacketRecord:
    """
    One manifest entry of a Knapp sum.

    Attributes:
        index: Frame index of the direction.
        k: Shell index.
        direction: Packet direction.
        center: Packet center.
        norms: Pairs (p label, ||f_nu||_p), possibly empty.

    """

    index: int
    k: int
    direction: tuple[float, ...]
    center: tuple[float, ...]
    norms: tuple[tuple[str, float], ...] = ()


@dataclass(frozen=True, slots=True, eq=False)
class KnappSum:
    """
    Knapp sum field with the manifest of its packets.

    Attributes:
        spec: Knapp specification.
        field: Sum of the packets.
        records: One record per packet, sorted by frame index.

    """

    spec: KnappSpec
    field: Field
    records: tuple[PacketRecord, ...]

    @property
    def count(self) -> int:
        """Number of summed packets."""
        return len(self.records)


@dataclass(frozen=True, slots=True)
class FlowReport:
    """
    Flow residuals r(t) = max |T_t f_nu(x) - f_nu(x + t grad phi(nu))|.

    Attributes:
        k: Shell index of the packet.
        phase: Phase label.
        times: Sample times.
        residuals: r(t) per sample.
        spectral_l1: ||f_hat_nu||_1.
        gamma: sup |xi_hat - nu|^2 |xi| over the packet spectrum.
        constant: Smallest C with r(t) <= C ||f_hat||_1 |t| (1 + gamma) on the samples.

    """

    k: int
    phase: str
    times: tuple[float, ...]
    residuals: tuple[float, ...]
    spectral_l1: float
    gamma: float
    constant: float

    def bounds(self) -> tuple[float, ...]:
        """
        Return the certified bound B(t) at every sample.

        Returns:
            tuple[float, ...]: C ||f_hat||_1 |t| (1 + gamma) per sample.

        """
        scale = self.constant * self.spectral_l1 * (1.0 + self.gamma)
        return tuple(scale * abs(t) for t in self.times)

    def certified(self, slack: float = 1e-12) -> bool:
        """
        Tell whether every residual lies under its bound.

        Args:
            slack: Absolute allowance for rounding.

        Returns:
            bool: ``True`` when r(t) <= B(t) + slack everywhere.

        """
        return all(
            residual <= bound + slack
            for residual, bound in zip(self.residuals, self.bounds(), strict=True)
        )


@dataclass(frozen=True, slots=True, eq=False)
class TubeSet:
    """
    Union of flow segments through a small disc transverse to the flow.

    Attributes:
        grid: Lattice of the mask.
        k: Shell index.
        theta: Tube parameter.
        phase: Phase label.
        velocity: Flow velocity grad phi(nu).
        center: Center of the base disc.
        mask: Lattice points inside the set.

    """

    grid: GridSpec
    k: int
    theta: float
    phase: str
    velocity: tuple[float, ...]
    center: tuple[float, ...]
    mask: BoolArray = field(repr=False)

    @property
    def measure(self) -> float:
        """Lattice measure: point count times the cell volume."""
        return float(np.count_nonzero(self.mask)) * self.grid.cell_volume

    @property
    def point_count(self) -> int:
        """Number of lattice points in the set."""
        return int(np.count_nonzero(self.mask))

    def points(self) -> RealArray:
        """
        Return the coordinates of the points in the set.

        Returns:
            RealArray: Array of shape (m, n) in lattice order.

        """
        axes = np.broadcast_arrays(*coordinates(self.grid))
        return np.stack([axis[self.mask] for axis in axes], axis=-1)
