"""Phase functions homogeneous of degree one."""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

from fiolab.exceptions import InvalidSymbolError, PacketConstructionError
from fiolab.lattice.grid import GridSpec, frequency_axes
from fiolab.lattice.types import RealArray

from .cones import ConeSpec

type PhaseKind = Literal["euclidean_norm", "anisotropic_quadratic", "zero"]

RANK_TOLERANCE = 1e-9


@dataclass(frozen=True, slots=True)
class PhaseSpec:
    """
    Phase phi(xi), positively homogeneous of degree one.

    Attributes:
        kind: ``euclidean_norm`` (|xi|), ``anisotropic_quadratic`` (sqrt(xi^T A xi))
            or ``zero``.
        matrix: Symmetric positive definite A for the anisotropic kind.
        cone: Optional conic support; the phase is set to zero outside it.

    """

    kind: PhaseKind
    matrix: tuple[tuple[float, ...], ...] | None = None
    cone: ConeSpec | None = None

    def __post_init__(self) -> None:
        """
        Validate the phase matrix.

        Raises:
            InvalidSymbolError: If the anisotropic matrix is missing or not SPD.

        """
        if self.kind != "anisotropic_quadratic":
            return
        if self.matrix is None:
            raise InvalidSymbolError.matrix_required()
        array = np.asarray(self.matrix, dtype=np.float64)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:  # noqa: PLR2004
            raise InvalidSymbolError.matrix_shape(len(self.matrix))
        if not np.allclose(array, array.T) or np.linalg.eigvalsh(array).min() <= 0:
            raise InvalidSymbolError.matrix_not_spd()

    @classmethod
    def euclidean(cls, cone: ConeSpec | None = None) -> "PhaseSpec":
        """
        Build phi(xi) = |xi|.

        Args:
            cone: Optional conic support.

        Returns:
            PhaseSpec: Euclidean phase.

        """
        return cls(kind="euclidean_norm", cone=cone)

    @classmethod
    def anisotropic(
        cls,
        matrix: Sequence[Sequence[float]],
        cone: ConeSpec | None = None,
    ) -> "PhaseSpec":
        """
        Build phi(xi) = sqrt(xi^T A xi).

        Args:
            matrix: Symmetric positive definite matrix.
            cone: Optional conic support.

        Returns:
            PhaseSpec: Anisotropic phase.

        Raises:
            InvalidSymbolError: If the matrix is not symmetric positive definite.

        """
        rows = tuple(tuple(float(v) for v in row) for row in matrix)
        return cls(kind="anisotropic_quadratic", matrix=rows, cone=cone)

    @classmethod
    def diagonal(cls, entries: Sequence[float]) -> "PhaseSpec":
        """
        Build the anisotropic phase with a diagonal matrix.

        Args:
            entries: Positive diagonal entries.

        Returns:
            PhaseSpec: Anisotropic phase.

        """
        matrix = np.diag(np.asarray(entries, dtype=np.float64))
        return cls.anisotropic(matrix.tolist())

    @classmethod
    def zero(cls) -> "PhaseSpec":
        """
        Build the zero phase.

        Returns:
            PhaseSpec: Zero phase.

        """
        return cls(kind="zero")

    def _matrix(self, dim: int) -> np.ndarray:
        if self.matrix is None:
            return np.eye(dim)
        array = np.asarray(self.matrix, dtype=np.float64)
        if array.shape != (dim, dim):
            raise InvalidSymbolError.matrix_shape(dim)
        return array

    def evaluate(self, components: Sequence[np.ndarray]) -> RealArray:
        """
        Evaluate phi on broadcastable frequency components.

        Args:
            components: One array per axis.

        Returns:
            RealArray: Phase values.

        Raises:
            InvalidSymbolError: If the matrix size differs from the dimension.

        """
        dim = len(components)
        if self.kind == "zero":
            values = np.zeros(np.broadcast_shapes(*(np.shape(c) for c in components)))
        elif self.kind == "euclidean_norm":
            values = np.sqrt(sum(np.square(c) for c in components))
        else:
            matrix = self._matrix(dim)
            quadratic = sum(
                matrix[i, j] * components[i] * components[j]
                for i in range(dim)
                for j in range(dim)
            )
            values = np.sqrt(np.maximum(quadratic, 0.0))
        if self.cone is not None:
            inside = self.cone.angle(components) <= self.cone.aperture
            values = np.where(inside, values, 0.0)
        return np.asarray(values, dtype=np.float64)

    def evaluate_points(self, points: np.ndarray) -> RealArray:
        """
        Evaluate phi on an array of frequency vectors.

        Args:
            points: Array of shape (..., n).

        Returns:
            RealArray: Phase values of shape (...).

        """
        array = np.asarray(points, dtype=np.float64)
        return self.evaluate([array[..., i] for i in range(array.shape[-1])])

    def on_grid(self, grid: GridSpec, t: float = 1.0) -> RealArray:
        """
        Tabulate t * phi(xi) on the frequency lattice.

        Args:
            grid: Lattice description.
            t: Scalar factor.

        Returns:
            RealArray: Values of shape ``grid.shape``.

        """
        values = self.evaluate(frequency_axes(grid))
        return t * np.broadcast_to(values, grid.shape)

    def gradient(self, direction: Sequence[float]) -> RealArray:
        """
        Return grad phi at a nonzero frequency, the group velocity of the flow.

        Args:
            direction: Nonzero frequency vector.

        Returns:
            RealArray: Gradient vector.

        """
        xi = np.asarray(direction, dtype=np.float64)
        if self.kind == "zero":
            return np.zeros_like(xi)
        if self.kind == "euclidean_norm":
            return xi / np.linalg.norm(xi)
        matrix = self._matrix(xi.size)
        return matrix @ xi / float(np.sqrt(xi @ matrix @ xi))

    def hessian(self, direction: Sequence[float]) -> RealArray:
        """
        Return the Hessian of phi at a nonzero frequency.

        Args:
            direction: Nonzero frequency vector.

        Returns:
            RealArray: Symmetric n x n matrix.

        """
        xi = np.asarray(direction, dtype=np.float64)
        dim = xi.size
        if self.kind == "zero":
            return np.zeros((dim, dim))
        matrix = self._matrix(dim)
        value = float(np.sqrt(xi @ matrix @ xi))
        image = matrix @ xi
        return matrix / value - np.outer(image, image) / value**3

    def curvature_rank(self, direction: Sequence[float]) -> int:
        """
        Return the rank of the Hessian at a nonzero frequency.

        Args:
            direction: Nonzero frequency vector.

        Returns:
            int: Rank, n - 1 under non-vanishing curvature.

        """
        hessian = self.hessian(direction)
        scale = max(float(np.abs(hessian).max()), 1.0)
        return int(np.linalg.matrix_rank(hessian, tol=RANK_TOLERANCE * scale))

    def has_full_curvature(self, dim: int) -> bool:
        """
        Tell whether the Hessian has rank n - 1 along every coordinate axis.

        Args:
            dim: Spatial dimension.

        Returns:
            bool: ``True`` for curved phases.

        """
        return all(self.curvature_rank(np.eye(dim)[i]) == dim - 1 for i in range(dim))

    def homogeneity_defect(self, points: np.ndarray, scales: Sequence[float]) -> float:
        """
        Return max |phi(lambda xi) - lambda phi(xi)| / max(1, lambda phi(xi)).

        Args:
            points: Frequency vectors of shape (m, n).
            scales: Positive factors lambda.

        Returns:
            float: Largest relative defect.

        """
        base = self.evaluate_points(points)
        defect = 0.0
        for scale in scales:
            scaled = self.evaluate_points(scale * np.asarray(points, dtype=np.float64))
            relative = np.abs(scaled - scale * base) / np.maximum(1.0, scale * base)
            defect = max(defect, float(relative.max()))
        return defect

    def flow_velocity(self, direction: Sequence[float]) -> RealArray:
        """
        Return grad phi(direction) for flow checks.

        Args:
            direction: Unit frequency direction.

        Returns:
            RealArray: Nonzero group velocity.

        Raises:
            PacketConstructionError: If the phase has no nonzero velocity there.

        """
        velocity = self.gradient(direction)
        if not np.any(velocity):
            raise PacketConstructionError.not_translation_invariant()
        return velocity

    def is_even(self) -> bool:
        """
        Tell whether phi(-xi) = phi(xi).

        Returns:
            bool: ``False`` once a one-sided cone restricts the phase.

        """
        return self.cone is None

    @property
    def label(self) -> str:
        """Short label used in reports."""
        if self.kind == "anisotropic_quadratic" and self.matrix is not None:
            entries = (row[i] for i, row in enumerate(self.matrix))
            diagonal = "-".join(f"{entry:g}" for entry in entries)
            return f"anisotropic_{diagonal}"
        return self.kind
