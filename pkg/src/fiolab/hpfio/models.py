"""Direction frames, quadrature grids and norm records."""

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.spatial import cKDTree

from fiolab.lattice.field import Field
from fiolab.lattice.types import RealArray

type Estimator = Literal["quadrature", "packet"]


@dataclass(frozen=True, slots=True, eq=False)
class DirectionFrame:
    """
    Maximal 2^(-k/2)-separated direction set Theta_k with Voronoi cap weights.

    Attributes:
        dim: Spatial dimension.
        k: Dyadic shell index.
        directions: Unit vectors of shape (M, n).
        weights: Voronoi cap measures, summing to |S^(n-1)|.
        covering_radius: Largest chordal distance from a sphere point to the set.

    """

    dim: int
    k: int
    directions: RealArray
    weights: RealArray
    covering_radius: float

    @property
    def separation(self) -> float:
        """Required chordal separation 2^(-k/2)."""
        return 2.0 ** (-self.k / 2)

    @property
    def count(self) -> int:
        """Number of directions |Theta_k|."""
        return int(self.directions.shape[0])

    def min_separation(self) -> float:
        """
        Return the smallest chordal distance between two directions.

        Returns:
            float: Minimum pairwise distance.

        """
        if self.count < 2:  # noqa: PLR2004
            return math.inf
        distances, _ = cKDTree(self.directions).query(self.directions, k=2)
        return float(distances[:, 1].min())

    def nearest(self, direction: RealArray) -> int:
        """
        Return the index of the frame direction closest to a unit vector.

        Args:
            direction: Unit vector.

        Returns:
            int: Index into ``directions``.

        """
        return int(np.argmax(self.directions @ np.asarray(direction, dtype=np.float64)))


@dataclass(frozen=True, slots=True, eq=False)
class DirectionQuadrature:
    """
    Quadrature rule on S^(n-1) for the omega-integral of the norm.

    Attributes:
        directions: Unit vectors of shape (M, n).
        weights: Quadrature weights summing to |S^(n-1)|.
        spacing: Nominal distance between neighbouring nodes.

    """

    directions: RealArray
    weights: RealArray
    spacing: float

    @property
    def count(self) -> int:
        """Number of nodes."""
        return int(self.directions.shape[0])


@dataclass(frozen=True, slots=True)
class FrameRow:
    """
    One exported frame direction.

    Attributes:
        k: Shell index.
        index: Position in the frame.
        direction: Direction components.
        weight: Cap measure.

    """

    k: int
    index: int
    direction: tuple[float, ...]
    weight: float


@dataclass(frozen=True, slots=True)
class NormRecord:
    """
    One norm evaluation for CSV export.

    Attributes:
        field_id: Witness identifier.
        k: Shell index of the witness.
        s: Smoothness index.
        p: Exponent label.
        estimator: ``quadrature`` or ``packet``.
        value: Norm value.

    """

    field_id: str
    k: int
    s: float
    p: str
    estimator: Estimator
    value: float


@dataclass(frozen=True, slots=True, eq=False)
class Witness:
    """
    Shell-localized test field with its provenance.

    Attributes:
        field_id: Identifier, unique within an ensemble.
        kind: ``packet``, ``knapp`` or ``random``.
        k: Dyadic shell the spectrum lives in.
        field: Space-domain samples.

    """

    field_id: str
    kind: str
    k: int
    field: Field


@dataclass(frozen=True, slots=True)
class EmbeddingRow:
    """
    Sobolev embedding ratios for one witness.

    Attributes:
        field_id: Witness identifier.
        kind: Witness kind.
        k: Shell index.
        strong: ||f||_{W^{s(p),p}}.
        fio: ||f||_{H^p_FIO}.
        weak: ||f||_{W^{-s(p),p}}.

    """

    field_id: str
    kind: str
    k: int
    strong: float
    fio: float
    weak: float

    @property
    def forward(self) -> float:
        """||f||_{W^{s(p),p}} / ||f||_{H^p_FIO}."""
        return self.strong / self.fio

    @property
    def backward(self) -> float:
        """||f||_{H^p_FIO} / ||f||_{W^{-s(p),p}}."""
        return self.fio / self.weak
