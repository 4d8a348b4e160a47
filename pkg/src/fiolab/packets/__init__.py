"""Knapp packets, Knapp sums, flow residuals and tube sets."""

from .envelope import envelope_l1, envelope_peak, envelope_spectrum
from .flow import (
    aperture_defect,
    calibrate_theta,
    constant_spread,
    flow_residual,
    spectral_l1,
    translate,
)
from .models import (
    DEFAULT_ENVELOPE,
    DEFAULT_KNAPP_APERTURE,
    FlowReport,
    KnappSpec,
    KnappSum,
    PacketRecord,
    TubeSet,
    WavePacketSpec,
)
from .synthesis import (
    envelope_coordinates,
    knapp_directions,
    make_knapp_sum,
    make_packet,
    packet_reach,
    packet_spectrum,
    packet_support,
    random_shell_field,
)
from .tubes import make_tube, tube_lower_bound

__all__ = [
    "DEFAULT_ENVELOPE",
    "DEFAULT_KNAPP_APERTURE",
    "FlowReport",
    "KnappSpec",
    "KnappSum",
    "PacketRecord",
    "TubeSet",
    "WavePacketSpec",
    "aperture_defect",
    "calibrate_theta",
    "constant_spread",
    "envelope_coordinates",
    "envelope_l1",
    "envelope_peak",
    "envelope_spectrum",
    "flow_residual",
    "knapp_directions",
    "make_knapp_sum",
    "make_packet",
    "make_tube",
    "packet_reach",
    "packet_spectrum",
    "packet_support",
    "random_shell_field",
    "spectral_l1",
    "translate",
    "tube_lower_bound",
]
