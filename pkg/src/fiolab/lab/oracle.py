"""Direct quadrature of spherical and ball means, a check on the spectral operators."""

import numpy as np
from numpy.polynomial.legendre import leggauss

from fiolab.hpfio.frame import direction_quadrature
from fiolab.lattice.field import Field
from fiolab.lattice.types import ComplexArray, RealArray
from fiolab.propagate.operators import sparse_spectrum
from fiolab.symbols.radial import sphere_area

SPHERE_NODES = 256
RADIAL_NODES = 64
POINT_BATCH = 256


def interpolate(field: Field, locations: RealArray) -> ComplexArray:
    """
    Evaluate the trigonometric interpolant of a field at arbitrary points.

    Args:
        field: Space-domain field.
        locations: Points of shape (m, n).

    Returns:
        ComplexArray: Values of shape (m,).

    """
    frequencies, coefficients = sparse_spectrum(field)
    points = np.atleast_2d(np.asarray(locations, dtype=np.float64))
    values = np.empty(points.shape[0], dtype=np.complex128)
    for start in range(0, points.shape[0], POINT_BATCH):
        chunk = points[start : start + POINT_BATCH]
        waves = np.exp(1j * chunk @ frequencies.T)
        values[start : start + chunk.shape[0]] = waves @ coefficients
    return values


def _sphere_sums(
    field: Field,
    points: RealArray,
    radius: float,
    nodes: int,
) -> ComplexArray:
    rule = direction_quadrature(field.grid.dim, 2 * np.pi / nodes)
    shifted = points[:, None, :] + radius * rule.directions[None, :, :]
    values = interpolate(field, shifted.reshape(-1, field.grid.dim))
    return values.reshape(points.shape[0], rule.count) @ rule.weights


def sphere_quadrature(
    field: Field,
    t: float,
    points: RealArray,
    nodes: int = SPHERE_NODES,
) -> ComplexArray:
    """
    Average the trigonometric interpolant of f over spheres of radius t.

    Args:
        field: Band-limited space-domain field.
        t: Sphere radius.
        points: Centers of shape (m, n).
        nodes: Circle nodes (equal angles in the plane, Fibonacci points in space).

    Returns:
        ComplexArray: Normalized spherical means at the centers.

    """
    centers = np.atleast_2d(np.asarray(points, dtype=np.float64))
    return _sphere_sums(field, centers, t, nodes) / sphere_area(field.grid.dim)


def ball_quadrature(
    field: Field,
    t: float,
    points: RealArray,
    nodes: int = SPHERE_NODES,
    radial_nodes: int = RADIAL_NODES,
) -> ComplexArray:
    """
    Integrate f(x + t y) over the unit ball in y, in polar coordinates.

    Gauss-Legendre nodes carry the radial integral with weight r^(n-1).

    Args:
        field: Band-limited space-domain field.
        t: Ball radius.
        points: Centers of shape (m, n).
        nodes: Nodes of each sphere.
        radial_nodes: Gauss-Legendre nodes on [0, 1].

    Returns:
        ComplexArray: Unnormalized ball integrals at the centers.

    """
    centers = np.atleast_2d(np.asarray(points, dtype=np.float64))
    abscissae, weights = leggauss(radial_nodes)
    radii = (abscissae + 1) / 2
    total = np.zeros(centers.shape[0], dtype=np.complex128)
    for radius, weight in zip(radii, weights / 2, strict=True):
        shell = _sphere_sums(field, centers, t * float(radius), nodes)
        total += weight * radius ** (field.grid.dim - 1) * shell
    return total
