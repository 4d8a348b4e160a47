"""Tube sets swept by flow curves and the lower bound of a propagated packet on them."""

import logging
from collections.abc import Sequence

import numpy as np

from fiolab.exceptions import InvalidGridError, PacketConstructionError
from fiolab.lattice.field import Field
from fiolab.lattice.grid import GridSpec, centered_offsets
from fiolab.propagate.models import TimeGrid
from fiolab.propagate.operators import evaluate_on_points
from fiolab.symbols.amplitudes import AmplitudeSpec
from fiolab.symbols.phases import PhaseSpec

from .models import MAX_THETA, TubeSet

logger = logging.getLogger(__name__)

POINT_BATCH = 256


def make_tube(
    grid: GridSpec,
    k: int,
    phase: PhaseSpec,
    theta: float,
    direction: Sequence[float] | None = None,
    center: tuple[float, ...] | None = None,
) -> TubeSet:
    """
    Build E = union of gamma_y([-theta, theta]) with gamma_y(t) = y - t grad phi(nu).

    The base disc E_0 = {y : y.nu = 0, |y| <= theta 2^(-k/2)} sits at ``center``;
    a point z = y - t v lies in E exactly when t = -z.nu / v.nu satisfies
    |t| <= theta and |z + t v| <= theta 2^(-k/2).

    Args:
        grid: Lattice description.
        k: Shell index.
        phase: Translation-invariant phase.
        theta: Tube parameter in (0, 1/2].
        direction: Flow direction nu, e_1 when omitted.
        center: Center of the base disc, the box center when omitted.

    Returns:
        TubeSet: Lattice mask of E.

    Raises:
        PacketConstructionError: If theta is out of range or the phase does not move.

    """
    if not 0 < theta <= MAX_THETA:
        raise PacketConstructionError.invalid_theta()
    axis = np.asarray(
        direction if direction is not None else np.eye(grid.dim)[0],
        dtype=np.float64,
    )
    if axis.size != grid.dim:
        raise PacketConstructionError.direction_dimension(grid.dim)
    axis = axis / np.linalg.norm(axis)
    velocity = phase.flow_velocity(axis)
    speed = float(velocity @ axis)
    if speed == 0.0:
        raise PacketConstructionError.not_translation_invariant()
    origin = center if center is not None else grid.center
    offsets = np.broadcast_arrays(*centered_offsets(grid, origin))
    along = sum(z * a for z, a in zip(offsets, axis, strict=True))
    t = -along / speed
    radius_squared = sum(
        np.square(z + t * v) for z, v in zip(offsets, velocity, strict=True)
    )
    width = theta * 2.0 ** (-k / 2)
    mask = (np.abs(t) <= theta) & (radius_squared <= width**2)
    mask.flags.writeable = False
    tube = TubeSet(
        grid=grid,
        k=k,
        theta=theta,
        phase=phase.label,
        velocity=tuple(float(v) for v in velocity),
        center=tuple(origin),
        mask=mask,
    )
    logger.debug(
        "tube k=%s holds %s points, measure %.4e",
        k,
        tube.point_count,
        tube.measure,
    )
    return tube


def tube_lower_bound(
    field: Field,
    phase: PhaseSpec,
    tube: TubeSet,
    times: TimeGrid,
    amplitude: AmplitudeSpec | None = None,
) -> float:
    """
    Return min over x in E of max over sampled t of Re e^(it phi(D)) a(tD) f(x).

    Args:
        field: Space-domain field.
        phase: Phase function.
        tube: Tube set on the field's lattice.
        times: Time samples, normally covering [-theta, theta].
        amplitude: Amplitude, the unit amplitude when omitted.

    Returns:
        float: Lower bound of the propagated field on the tube.

    Raises:
        InvalidGridError: If the tube lives on another lattice.

    """
    if tube.grid != field.grid:
        raise InvalidGridError.mismatch()
    points = tube.points()
    samples = times.samples
    best = np.empty(points.shape[0])
    for start in range(0, points.shape[0], POINT_BATCH):
        chunk = points[start : start + POINT_BATCH]
        values = evaluate_on_points(field, phase, chunk, samples, amplitude)
        best[start : start + chunk.shape[0]] = values.real.max(axis=0)
    return float(best.min(initial=np.inf))
