"""fiolab public package API."""

from .client import FioLabClient
from .exceptions import (
    DomainMismatchError,
    FioLabConfigurationError,
    FioLabError,
    FitError,
    InvalidBesselArgumentError,
    InvalidExponentError,
    InvalidGridError,
    InvalidSymbolError,
    PacketConstructionError,
    ReportFormatError,
    SupportViolationError,
    UnderResolvedFrameError,
    UnderResolvedTimeGridError,
)
from .exponent import LebesgueExponent
from .lab.config import ExperimentConfig, load_config
from .lab.models import ExperimentRun, ReportRow, ScalingReport
from .lab.types import ExperimentKind
from .lattice.field import Field
from .lattice.grid import GridSpec, make_grid
from .settings import LabSettings

__version__ = "0.1.0"

__all__ = [
    "DomainMismatchError",
    "ExperimentConfig",
    "ExperimentKind",
    "ExperimentRun",
    "Field",
    "FioLabClient",
    "FioLabConfigurationError",
    "FioLabError",
    "FitError",
    "GridSpec",
    "InvalidBesselArgumentError",
    "InvalidExponentError",
    "InvalidGridError",
    "InvalidSymbolError",
    "LabSettings",
    "LebesgueExponent",
    "PacketConstructionError",
    "ReportFormatError",
    "ReportRow",
    "ScalingReport",
    "SupportViolationError",
    "UnderResolvedFrameError",
    "UnderResolvedTimeGridError",
    "load_config",
    "make_grid",
]
