"""Flow residual of a propagated packet and the calibration of the tube parameter."""

import logging
from collections.abc import Sequence

import numpy as np
import scipy.fft

from fiolab.lattice.field import Field
from fiolab.lattice.grid import GridSpec, frequency_axes, frequency_norm, nyquist_mask
from fiolab.lattice.transforms import filter_field
from fiolab.lattice.types import RealArray
from fiolab.propagate.operators import half_wave
from fiolab.symbols.phases import PhaseSpec

from .envelope import envelope_peak
from .models import MAX_THETA, FlowReport, WavePacketSpec
from .synthesis import make_packet

logger = logging.getLogger(__name__)

SUPPORT_FLOOR = 1e-12
THETA_CANDIDATES = (MAX_THETA, 0.25, 0.125, 0.0625)
CALIBRATION_SHELL = 4
CALIBRATION_SAMPLES = 9


def translate(field: Field, shift: Sequence[float], workers: int = 1) -> Field:
    """
    Return x -> f(x + shift), computed spectrally.

    Nyquist bins are dropped, since the translation symbol is not even there.

    Args:
        field: Space-domain field.
        shift: Displacement vector.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        Field: Translated field.

    """
    grid = field.grid
    phase = sum(
        axis * component
        for axis, component in zip(frequency_axes(grid), shift, strict=True)
    )
    symbol = np.where(nyquist_mask(grid), 0.0, np.exp(1j * phase))
    return filter_field(field, symbol, workers)


def spectral_l1(field: Field, workers: int = 1) -> float:
    """
    Return ||f_hat||_1 as a Riemann sum over the frequency lattice.

    Args:
        field: Space-domain field.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        float: Spectral L^1 norm.

    """
    grid = field.grid
    spectrum = scipy.fft.fftn(field.samples, workers=workers) * grid.cell_volume
    return float(np.abs(spectrum).sum()) * grid.frequency_cell


def aperture_defect(
    field: Field,
    direction: Sequence[float],
    workers: int = 1,
) -> float:
    """
    Return gamma = sup |xi_hat - nu|^2 |xi| over the energetic spectrum.

    Args:
        field: Space-domain field.
        direction: Unit direction nu.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        float: Aperture defect gamma.

    """
    grid = field.grid
    magnitude = np.abs(scipy.fft.fftn(field.samples, workers=workers))
    support = magnitude > SUPPORT_FLOOR * float(magnitude.max(initial=0.0))
    radius = frequency_norm(grid)
    support &= radius > 0
    if not support.any():
        return 0.0
    projection = sum(
        np.broadcast_to(axis, grid.shape)[support] * component
        for axis, component in zip(frequency_axes(grid), direction, strict=True)
    )
    radii = radius[support]
    chord_squared = np.maximum(2.0 - 2.0 * projection / radii, 0.0)
    return float((chord_squared * radii).max())


def flow_residual(
    field: Field,
    spec: WavePacketSpec,
    phase: PhaseSpec,
    times: Sequence[float],
    workers: int = 1,
) -> FlowReport:
    """
    Compare e^(it phi(D)) f_nu with the translate f_nu(. + t grad phi(nu)).

    Args:
        field: Packet f_nu on the lattice.
        spec: Packet specification, providing nu and k.
        phase: Translation-invariant phase.
        times: Sample times.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        FlowReport: Residuals with the fitted constant of the linear bound.

    Raises:
        PacketConstructionError: If the phase has no nonzero velocity at nu.

    """
    velocity = phase.flow_velocity(spec.direction)
    residuals = []
    for t in times:
        propagated = half_wave(field, phase, t=t, workers=workers)
        moved = translate(field, t * velocity, workers)
        residuals.append(float(np.abs(propagated.samples - moved.samples).max()))
    l1 = spectral_l1(field, workers)
    gamma = aperture_defect(field, spec.direction, workers)
    ratios = [
        residual / (l1 * abs(t) * (1.0 + gamma))
        for t, residual in zip(times, residuals, strict=True)
        if t != 0 and l1 > 0
    ]
    return FlowReport(
        k=spec.k,
        phase=phase.label,
        times=tuple(float(t) for t in times),
        residuals=tuple(residuals),
        spectral_l1=l1,
        gamma=gamma,
        constant=max(ratios, default=0.0),
    )


def constant_spread(reports: Sequence[FlowReport]) -> float:
    """
    Return max C / min C over reports, the k-uniformity measure of the flow bound.

    Args:
        reports: Flow reports with positive constants.

    Returns:
        float: Ratio of the extreme constants, 1 for a single report.

    """
    constants = [report.constant for report in reports if report.constant > 0]
    if not constants:
        return 1.0
    return max(constants) / min(constants)


def calibrate_theta(
    grid: GridSpec,
    phase: PhaseSpec,
    direction: Sequence[float] | None = None,
    *,
    envelope: float | None = None,
    k: int = CALIBRATION_SHELL,
    candidates: Sequence[float] = THETA_CANDIDATES,
    workers: int = 1,
) -> float:
    """
    Pick the largest theta with flow residual <= psi(0)/2 on [-theta, theta].

    Args:
        grid: Lattice of the calibration run.
        phase: Translation-invariant phase.
        direction: Packet direction, e_1 when omitted.
        envelope: Envelope radius, the packet default when omitted.
        k: Shell of the calibration packet.
        candidates: Trial values, tried from the largest.
        workers: Worker count handed to ``scipy.fft``.

    Returns:
        float: Calibrated theta; the smallest candidate when none passes.

    """
    axis = direction if direction is not None else tuple(np.eye(grid.dim)[0])
    spec = (
        WavePacketSpec(k=k, direction=tuple(axis))
        if envelope is None
        else WavePacketSpec(k=k, direction=tuple(axis), envelope=envelope)
    )
    packet = make_packet(spec, grid, workers)
    threshold = envelope_peak(grid.dim, spec.envelope) / 2
    ordered = sorted(candidates, reverse=True)
    for theta in ordered:
        times: RealArray = np.linspace(-theta, theta, CALIBRATION_SAMPLES)
        report = flow_residual(packet, spec, phase, times.tolist(), workers)
        if max(report.residuals) <= threshold:
            logger.info("calibrated theta=%s for phase %s", theta, phase.label)
            return theta
    logger.warning(
        "no theta passed the flow calibration for phase %s, using %s",
        phase.label,
        ordered[-1],
    )
    return ordered[-1]
