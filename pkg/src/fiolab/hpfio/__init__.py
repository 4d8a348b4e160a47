"""Direction frames, Sobolev norms and the H^(s,p)_FIO norm estimators."""

from .cutoffs import (
    ConicFamily,
    FrameCutoffs,
    cap_family,
    conic_family,
    frame_cutoffs,
    radial_cutoff,
    unit_frequencies,
)
from .embedding import embedding_report, hpfio_norm, norm_records
from .frame import build_frame, direction_quadrature, fibonacci_sphere, frame_table
from .models import (
    DirectionFrame,
    DirectionQuadrature,
    EmbeddingRow,
    Estimator,
    FrameRow,
    NormRecord,
    Witness,
)
from .norms import (
    check_shell_support,
    directional_terms,
    hpfio_norm_packet,
    hpfio_norm_quadrature,
    quadrature_for,
    reproduce,
    sobolev_norm,
    sup_norm_proxy,
)

__all__ = [
    "ConicFamily",
    "DirectionFrame",
    "DirectionQuadrature",
    "EmbeddingRow",
    "Estimator",
    "FrameCutoffs",
    "FrameRow",
    "NormRecord",
    "Witness",
    "build_frame",
    "cap_family",
    "check_shell_support",
    "conic_family",
    "direction_quadrature",
    "directional_terms",
    "embedding_report",
    "fibonacci_sphere",
    "frame_cutoffs",
    "frame_table",
    "hpfio_norm",
    "hpfio_norm_packet",
    "hpfio_norm_quadrature",
    "norm_records",
    "quadrature_for",
    "radial_cutoff",
    "reproduce",
    "sobolev_norm",
    "sup_norm_proxy",
    "unit_frequencies",
]
