"""Experiment configuration, scaling reports and the experiment service."""

from .config import (
    AmplitudeConfig,
    ExperimentConfig,
    GridConfig,
    PacketsConfig,
    PhaseConfig,
    TimePolicy,
    load_config,
)
from .fitting import MIN_FIT_ROWS, SlopeFit, fit_slope
from .interfaces import ReportRenderer, ReportSink
from .models import ExperimentRun, ReportRow, ScalingReport, judge, verdict_label
from .oracle import ball_quadrature, interpolate, sphere_quadrature
from .service import ExperimentService
from .types import EmbeddingSide, ExperimentKind, MeanFamily, Relation, WitnessKind
from .witnesses import make_witness, shell_seed

__all__ = [
    "MIN_FIT_ROWS",
    "AmplitudeConfig",
    "EmbeddingSide",
    "ExperimentConfig",
    "ExperimentKind",
    "ExperimentRun",
    "ExperimentService",
    "GridConfig",
    "MeanFamily",
    "PacketsConfig",
    "PhaseConfig",
    "Relation",
    "ReportRenderer",
    "ReportRow",
    "ReportSink",
    "ScalingReport",
    "SlopeFit",
    "TimePolicy",
    "WitnessKind",
    "ball_quadrature",
    "fit_slope",
    "interpolate",
    "judge",
    "load_config",
    "make_witness",
    "shell_seed",
    "sphere_quadrature",
    "verdict_label",
]
