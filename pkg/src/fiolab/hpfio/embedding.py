"""Sobolev embedding ratios and norm tables over witness ensembles."""

import logging
from collections.abc import Sequence

from fiolab.exponent import LebesgueExponent
from fiolab.symbols.exponents import exponents

from .models import EmbeddingRow, Estimator, NormRecord, Witness
from .norms import (
    DEFAULT_OVERSAMPLING,
    DEFAULT_SUPPORT_TOLERANCE,
    ExponentLike,
    hpfio_norm_packet,
    hpfio_norm_quadrature,
    sobolev_norm,
)

logger = logging.getLogger(__name__)


def hpfio_norm(
    witness: Witness,
    s: float,
    p: ExponentLike,
    estimator: Estimator = "packet",
    *,
    support_tolerance: float = DEFAULT_SUPPORT_TOLERANCE,
    oversampling: float = DEFAULT_OVERSAMPLING,
    workers: int = 1,
    max_workers: int = 1,
) -> float:
    """
    Evaluate the H^(s,p)_FIO norm of a witness with the chosen estimator.

    Args:
        witness: Shell-localized field.
        s: Smoothness index.
        p: Exponent in (1, inf).
        estimator: ``packet`` for the shell form, ``quadrature`` for the
            direction integral.
        support_tolerance: Energy fraction allowed outside the shell.
        oversampling: Direction-grid refinement of the quadrature estimator.
        workers: Worker count handed to ``scipy.fft``.
        max_workers: Number of directions evaluated concurrently.

    Returns:
        float: Norm value.

    """
    if estimator == "quadrature":
        return hpfio_norm_quadrature(
            witness.field,
            s,
            p,
            oversampling=oversampling,
            workers=workers,
            max_workers=max_workers,
        )
    return hpfio_norm_packet(
        witness.field,
        s,
        p,
        witness.k,
        support_tolerance=support_tolerance,
        workers=workers,
        max_workers=max_workers,
    )


def embedding_report(
    witnesses: Sequence[Witness],
    p: ExponentLike,
    *,
    estimator: Estimator = "packet",
    support_tolerance: float = DEFAULT_SUPPORT_TOLERANCE,
    oversampling: float = DEFAULT_OVERSAMPLING,
    workers: int = 1,
    max_workers: int = 1,
) -> list[EmbeddingRow]:
    """
    Measure both sides of W^(s(p),p) in H^p_FIO in W^(-s(p),p) on every witness.

    Args:
        witnesses: Shell-localized fields of one dimension.
        p: Exponent in (1, inf).
        estimator: Estimator used for the FIO norm.
        support_tolerance: Energy fraction allowed outside the shell.
        oversampling: Direction-grid refinement of the quadrature estimator.
        workers: Worker count handed to ``scipy.fft``.
        max_workers: Number of directions evaluated concurrently.

    Returns:
        list[EmbeddingRow]: One row per witness, in input order.

    """
    exponent = LebesgueExponent.parse(p)
    rows: list[EmbeddingRow] = []
    for position, witness in enumerate(witnesses, start=1):
        loss = float(exponents(witness.field.grid.dim, exponent).s_p)
        fio = hpfio_norm(
            witness,
            0.0,
            exponent,
            estimator,
            support_tolerance=support_tolerance,
            oversampling=oversampling,
            workers=workers,
            max_workers=max_workers,
        )
        strong = sobolev_norm(witness.field, loss, exponent, workers)
        weak = sobolev_norm(witness.field, -loss, exponent, workers)
        rows.append(
            EmbeddingRow(
                field_id=witness.field_id,
                kind=witness.kind,
                k=witness.k,
                strong=strong,
                fio=fio,
                weak=weak,
            ),
        )
        logger.info(
            "[%s/%s] embedding ratios for %s",
            position,
            len(witnesses),
            witness.field_id,
        )
    return rows


def norm_records(
    witnesses: Sequence[Witness],
    s: float,
    p: ExponentLike,
    estimators: Sequence[Estimator] = ("packet", "quadrature"),
    *,
    workers: int = 1,
    max_workers: int = 1,
) -> list[NormRecord]:
    """
    Evaluate every witness with every estimator.

    Args:
        witnesses: Shell-localized fields.
        s: Smoothness index.
        p: Exponent in (1, inf).
        estimators: Estimators to run, in column order.
        workers: Worker count handed to ``scipy.fft``.
        max_workers: Number of directions evaluated concurrently.

    Returns:
        list[NormRecord]: Rows ordered by witness, then estimator.

    """
    exponent = LebesgueExponent.parse(p)
    return [
        NormRecord(
            field_id=witness.field_id,
            k=witness.k,
            s=s,
            p=str(exponent),
            estimator=estimator,
            value=hpfio_norm(
                witness,
                s,
                exponent,
                estimator,
                workers=workers,
                max_workers=max_workers,
            ),
        )
        for witness in witnesses
        for estimator in estimators
    ]
