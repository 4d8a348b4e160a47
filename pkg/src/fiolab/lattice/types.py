"""Common type aliases used by the lattice layer."""

from typing import Literal

import numpy as np
from numpy.typing import NDArray

type DomainTag = Literal["space", "frequency"]
"""Which side of the transform a field's samples live on."""

type ComplexArray = NDArray[np.complex128]
type RealArray = NDArray[np.float64]
type BoolArray = NDArray[np.bool_]
type IntArray = NDArray[np.int64]
