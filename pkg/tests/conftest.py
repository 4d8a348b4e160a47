import sys
from pathlib import Path

import numpy as np
import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from fiolab.lattice import GridSpec, make_grid  # noqa: E402


@pytest.fixture
def small_grid() -> GridSpec:
    return make_grid(2, 64, 16.0)


@pytest.fixture
def cube_grid() -> GridSpec:
    return make_grid(3, 16, 8.0)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260117)
