"""Spectral synthesis of wave packets, Knapp sums and random shell fields."""

import logging
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np

from fiolab.exceptions import PacketConstructionError
from fiolab.exponent import LebesgueExponent
from fiolab.hpfio.frame import build_frame
from fiolab.lattice.field import Field
from fiolab.lattice.grid import GridSpec, frequency_axes
from fiolab.lattice.norms import lp_norm
from fiolab.lattice.transforms import dft_inverse, filter_field
from fiolab.lattice.types import BoolArray, ComplexArray, RealArray
from fiolab.symbols.multipliers import shell_symbol

from .envelope import envelope_spectrum
from .models import KnappSpec, KnappSum, PacketRecord, WavePacketSpec

logger = logging.getLogger(__name__)

type ExponentLike = LebesgueExponent | float | str | Fraction


def _ordered_map[T, R](
    task: Callable[[T], R],
    items: Sequence[T],
    max_workers: int,
) -> list[R]:
    if max_workers == 1:
        return [task(item) for item in items]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(task, items))


def _check_reach(grid: GridSpec, k: int, reach: float) -> None:
    if reach >= grid.nyquist:
        raise PacketConstructionError.shell_too_high(k, reach, grid.nyquist)


def _direction(spec: WavePacketSpec, grid: GridSpec) -> RealArray:
    if spec.dim != grid.dim:
        raise PacketConstructionError.direction_dimension(grid.dim)
    return np.asarray(spec.direction, dtype=np.float64)


def packet_reach(spec: WavePacketSpec) -> float:
    """
    Return the largest |xi| in the packet spectrum.

    Args:
        spec: Packet specification.

    Returns:
        float: Upper bound on the spectral radius.

    """
    scale = 2.0**spec.k
    return math.hypot(scale * (1 + spec.envelope), spec.envelope * math.sqrt(scale))


def envelope_coordinates(spec: WavePacketSpec, grid: GridSpec) -> RealArray:
    """
    Return |eta|^2 with eta = (2^-k (xi - 2^k nu) . nu, 2^(-k/2) P_nu^perp xi).

    Args:
        spec: Packet specification.
        grid: Lattice description.

    Returns:
        RealArray: Squared envelope coordinates of shape ``grid.shape``.

    Raises:
        PacketConstructionError: If the direction has the wrong size.

    """
    direction = _direction(spec, grid)
    scale = 2.0**spec.k
    shifted = [
        axis - scale * component
        for axis, component in zip(frequency_axes(grid), direction, strict=True)
    ]
    pairs = zip(shifted, direction, strict=True)
    parallel = sum(part * component for part, component in pairs)
    squared = sum(np.square(part) for part in shifted)
    perpendicular = np.maximum(squared - np.square(parallel), 0.0)
    values = np.square(parallel / scale) + perpendicular / scale
    return np.broadcast_to(values, grid.shape)


def packet_support(spec: WavePacketSpec, grid: GridSpec) -> BoolArray:
    """
    Mark the bins where the packet spectrum is nonzero.

    Args:
        spec: Packet specification.
        grid: Lattice description.

    Returns:
        BoolArray: Support mask.

    """
    return envelope_coordinates(spec, grid) < spec.envelope**2


def packet_spectrum(spec: WavePacketSpec, grid: GridSpec) -> ComplexArray:
    """
    Sample f_hat_nu(xi) = 2^(-k(n+1)/2) psi_hat(eta) e^(-i xi.x0) on the lattice.

    Args:
        spec: Packet specification.
        grid: Lattice description.

    Returns:
        ComplexArray: Spectrum in FFT order.

    """
    amplitude = 2.0 ** (-spec.k * (grid.dim + 1) / 2)
    envelope = envelope_spectrum(envelope_coordinates(spec, grid), spec.envelope)
    center = spec.centered_on(grid)
    shift = sum(
        axis * position
        for axis, position in zip(frequency_axes(grid), center, strict=True)
    )
    return amplitude * envelope * np.exp(-1j * shift)


def make_packet(spec: WavePacketSpec, grid: GridSpec, workers: int = 1) -> Field:
    """
    Build f_nu(x) = e^(i 2^k nu.x) psi(2^k (nu.x) nu + 2^(k/2) P_nu^perp x).

    The spectrum is sampled exactly and inverted. This equals synthesizing the
    spatial formula, periodizing it over the box and projecting onto the lattice
    frequencies; the periodization error is what ``boundary_leakage`` reports.

    Args:
        spec: Packet specification.
        grid: Lattice with Nyquist frequency above the packet spectrum.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Field: Space-domain packet.

    Raises:
        PacketConstructionError: If the spectrum reaches Nyquist or the direction
            has the wrong size.

    """
    _check_reach(grid, spec.k, packet_reach(spec))
    spectrum = packet_spectrum(spec, grid)
    return dft_inverse(Field(grid, spectrum, "frequency"), workers)


def knapp_directions(spec: KnappSpec, dim: int) -> list[int]:
    """
    Return the indices of frame directions inside the Knapp cone.

    Args:
        spec: Knapp specification.
        dim: Spatial dimension.

    Returns:
        list[int]: Sorted frame indices.

    Raises:
        PacketConstructionError: If the axis has the wrong size.

    """
    if len(spec.axis) != dim:
        raise PacketConstructionError.direction_dimension(dim)
    frame = build_frame(dim, spec.k)
    cosines = np.clip(frame.directions @ np.asarray(spec.axis), -1.0, 1.0)
    return [int(i) for i in np.flatnonzero(np.arccos(cosines) <= spec.aperture)]


def make_knapp_sum(
    spec: KnappSpec,
    grid: GridSpec,
    exponents: Sequence[ExponentLike] = (),
    *,
    workers: int = 1,
    max_workers: int = 1,
) -> KnappSum:
    """
    Sum the packets f_nu over nu in Theta_k inside the cone.

    Args:
        spec: Knapp specification.
        grid: Lattice description.
        exponents: Exponents whose packet norms go into the manifest.
        workers: Worker count handed to ``scipy.fft``.
        max_workers: Number of packets synthesized concurrently.

    Returns:
        KnappSum: Sum field and manifest, summed in frame-index order.

    Raises:
        PacketConstructionError: If the cone holds no frame direction or a packet
            cannot be represented on the grid.

    """
    indices = knapp_directions(spec, grid.dim)
    if not indices:
        raise PacketConstructionError.empty_cone(spec.k)
    frame = build_frame(grid.dim, spec.k)
    labels = [str(LebesgueExponent.parse(p)) for p in exponents]

    def build(index: int) -> tuple[Field, PacketRecord]:
        member = spec.packet(frame.directions[index])
        packet = make_packet(member, grid, workers)
        record = PacketRecord(
            index=index,
            k=spec.k,
            direction=member.direction,
            center=member.centered_on(grid),
            norms=tuple(
                (label, lp_norm(packet, label)) for label in labels
            ),
        )
        return packet, record

    built = _ordered_map(build, indices, max_workers)
    total = np.zeros(grid.shape, dtype=np.complex128)
    for packet, _ in built:
        total += packet.samples
    logger.info("Knapp sum k=%s over %s directions", spec.k, len(built))
    return KnappSum(
        spec=spec,
        field=Field(grid, total),
        records=tuple(record for _, record in built),
    )


def random_shell_field(grid: GridSpec, k: int, seed: int, workers: int = 1) -> Field:
    """
    Draw a complex Gaussian field filtered to shell k, with unit L^2 norm.

    Args:
        grid: Lattice description.
        k: Shell index.
        seed: Seed of the generator.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Field: Random shell-localized field.

    Raises:
        PacketConstructionError: If the shell reaches Nyquist.

    """
    _check_reach(grid, k, 2.0 ** (k + 1))
    generator = np.random.default_rng(seed)
    real, imaginary = generator.standard_normal((2, *grid.shape))
    noise = real + 1j * imaginary
    field = filter_field(Field(grid, noise), shell_symbol(grid, k), workers)
    return field.scale(1.0 / lp_norm(field, 2))
