"""Common type aliases used by the experiment layer."""

from typing import Literal

type ExperimentKind = Literal[
    "upper_bound_sweep",
    "knapp_sharpness",
    "embedding",
    "flow_lemma",
    "tube_bound",
    "convergence",
    "mean_oracle",
    "local_smoothing",
    "invariance",
]
"""Experiment names accepted in configs and fixed by CLI subcommands."""

type Relation = Literal["le", "ge", "eq", "spread", "floor", "band", "max", "none"]
"""How a report's verdict is derived from its columns."""

type WitnessKind = Literal["packet", "knapp", "random"]

type MeanFamily = Literal["half_wave", "sphere", "complex"]

type EmbeddingSide = Literal["forward", "backward"]
