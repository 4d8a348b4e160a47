"""Direction sets on S^(n-1): the frames Theta_k and omega-quadrature rules."""

import logging
import math
from functools import lru_cache

import numpy as np
from scipy.spatial import SphericalVoronoi, cKDTree

from fiolab.exceptions import InvalidGridError, UnderResolvedFrameError
from fiolab.lattice.types import RealArray
from fiolab.symbols.radial import sphere_area

from .models import DirectionFrame, DirectionQuadrature, FrameRow

logger = logging.getLogger(__name__)

MAX_FRAME_SHELL = {2: 12, 3: 8}
CANDIDATE_DENSITY = 16
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))
FRAME_CACHE_SIZE = 32


def _freeze(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def fibonacci_sphere(count: int) -> RealArray:
    """
    Return ``count`` nearly equal-area points on S^2 along the golden spiral.

    Args:
        count: Number of points.

    Returns:
        RealArray: Unit vectors of shape (count, 3).

    """
    offsets = np.arange(count, dtype=np.float64) + 0.5
    heights = 1.0 - 2.0 * offsets / count
    radii = np.sqrt(1.0 - heights**2)
    angles = GOLDEN_ANGLE * offsets
    return np.stack([radii * np.cos(angles), radii * np.sin(angles), heights], axis=1)


def _circle_frame(k: int) -> DirectionFrame:
    separation = 2.0 ** (-k / 2)
    count = math.floor(2 * math.pi / (2 * math.asin(separation / 2)))
    angles = 2 * math.pi * np.arange(count) / count
    directions = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    weights = np.full(count, 2 * math.pi / count)
    return DirectionFrame(
        dim=2,
        k=k,
        directions=_freeze(directions),
        weights=_freeze(weights),
        covering_radius=2 * math.sin(math.pi / (2 * count)),
    )


def _thin(candidates: RealArray, separation: float) -> RealArray:
    """Greedily keep candidates at distance >= separation from every kept one."""
    tree = cKDTree(candidates)
    blocked = np.zeros(candidates.shape[0], dtype=bool)
    kept = []
    for index, point in enumerate(candidates):
        if blocked[index]:
            continue
        kept.append(index)
        blocked[tree.query_ball_point(point, separation)] = True
    return candidates[kept]


def _fill_holes(
    points: RealArray,
    separation: float,
) -> tuple[RealArray, SphericalVoronoi, float]:
    """Add Voronoi vertices farther than ``separation`` until the set is maximal."""
    while True:
        voronoi = SphericalVoronoi(points)
        distances, _ = cKDTree(points).query(voronoi.vertices)
        uncovered = distances > separation
        if not uncovered.any():
            return points, voronoi, float(distances.max())
        order = np.argsort(-distances[uncovered], kind="stable")
        added: list[RealArray] = []
        for vertex in voronoi.vertices[uncovered][order]:
            if all(np.linalg.norm(vertex - other) > separation for other in added):
                added.append(vertex / np.linalg.norm(vertex))
        logger.debug("frame repair added %s directions", len(added))
        points = np.vstack([points, np.asarray(added)])


def _sphere_frame(k: int) -> DirectionFrame:
    separation = 2.0 ** (-k / 2)
    count = math.ceil(CANDIDATE_DENSITY * 4 * math.pi / separation**2)
    candidates = fibonacci_sphere(count)
    points, voronoi, covering = _fill_holes(_thin(candidates, separation), separation)
    return DirectionFrame(
        dim=3,
        k=k,
        directions=_freeze(points),
        weights=_freeze(voronoi.calculate_areas()),
        covering_radius=covering,
    )


@lru_cache(maxsize=FRAME_CACHE_SIZE)
def build_frame(dim: int, k: int) -> DirectionFrame:
    """
    Build the maximal 2^(-k/2)-separated direction set Theta_k.

    Circles use uniform angles at the smallest spacing with chord >= 2^(-k/2).
    Spheres thin a Fibonacci spiral greedily and then add Voronoi vertices left
    uncovered, so the set is both separated and maximal.

    Args:
        dim: Spatial dimension, 2 or 3.
        k: Shell index, 1 <= k <= 12 for n = 2 and 1 <= k <= 8 for n = 3.

    Returns:
        DirectionFrame: Directions with Voronoi cap weights.

    Raises:
        InvalidGridError: If the dimension is unsupported.
        UnderResolvedFrameError: If k is out of the supported range.

    """
    limit = MAX_FRAME_SHELL.get(dim)
    if limit is None:
        raise InvalidGridError.unsupported_dimension(dim)
    if not 1 <= k <= limit:
        raise UnderResolvedFrameError.shell_out_of_range(k, dim, limit)
    frame = _circle_frame(k) if dim == 2 else _sphere_frame(k)  # noqa: PLR2004
    logger.debug(
        "frame k=%s in dimension %s: %s directions, covering radius %.4f",
        k,
        dim,
        frame.count,
        frame.covering_radius,
    )
    return frame


@lru_cache(maxsize=FRAME_CACHE_SIZE)
def direction_quadrature(dim: int, spacing: float) -> DirectionQuadrature:
    """
    Build an equal-weight quadrature rule on S^(n-1) with nodes about ``spacing`` apart.

    Args:
        dim: Spatial dimension, 2 or 3.
        spacing: Target node spacing.

    Returns:
        DirectionQuadrature: Nodes and weights summing to |S^(n-1)|.

    Raises:
        InvalidGridError: If the dimension is unsupported.

    """
    if dim not in MAX_FRAME_SHELL:
        raise InvalidGridError.unsupported_dimension(dim)
    if dim == 2:  # noqa: PLR2004
        count = math.ceil(2 * math.pi / spacing)
        angles = 2 * math.pi * np.arange(count) / count
        directions = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    else:
        count = math.ceil(4 * math.pi / spacing**2)
        directions = fibonacci_sphere(count)
    weights = np.full(count, sphere_area(dim) / count)
    return DirectionQuadrature(_freeze(directions), _freeze(weights), spacing)


def frame_table(frame: DirectionFrame) -> list[FrameRow]:
    """
    Flatten a frame into exportable rows.

    Args:
        frame: Direction frame.

    Returns:
        list[FrameRow]: One row per direction.

    """
    return [
        FrameRow(
            k=frame.k,
            index=index,
            direction=tuple(float(c) for c in direction),
            weight=float(weight),
        )
        for index, (direction, weight) in enumerate(
            zip(frame.directions, frame.weights, strict=True),
        )
    ]
