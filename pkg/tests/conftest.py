"""Pytest configuration file."""

import sys
from pathlib import Path

import pytest
import structlog

# Add src directory (package) and repository root (cli.py) to Python path
root_path = Path(__file__).parent.parent
sys.path.insert(0, str(root_path / "src"))
sys.path.insert(0, str(root_path))

from genjacobi.params import AnalyticFactor, WeightParams  # noqa: E402


@pytest.fixture(autouse=True)
def reset_structlog():
    """Drop logging configuration bound to a per-test capture stream."""
    yield
    structlog.reset_defaults()


@pytest.fixture
def legendre():
    return WeightParams(alpha=0.0, beta=0.0, gamma=0.0, x0=0.0)


@pytest.fixture
def chebyshev():
    return WeightParams(alpha=-0.5, beta=-0.5, gamma=0.0, x0=0.0)


@pytest.fixture
def abs_weight():
    """|x| on [-1, 1]."""
    return WeightParams(alpha=0.0, beta=0.0, gamma=1.0, x0=0.0)


@pytest.fixture
def generic():
    """Singularity and jump at an off-center point."""
    return WeightParams(alpha=-0.5, beta=-0.5, gamma=1.0, x0=0.3, c2=2.0)


@pytest.fixture
def generic_exp():
    return WeightParams(alpha=0.0, beta=0.5, gamma=0.6, x0=-0.2, c2=4.0,
                        h=AnalyticFactor.exp_linear(1.0))
