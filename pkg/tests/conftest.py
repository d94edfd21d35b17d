"""Pytest configuration and shared fixtures."""
import sys
from pathlib import Path

import numpy as np
import pytest

# Add src to Python path
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

from src.domain.entities.ris import Direction, RisGeometry  # noqa: E402
from src.domain.services.golay_array import construct_stacked  # noqa: E402
from src.domain.services.golay_core import known_golay_pair  # noqa: E402


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line("markers", "unit: mark test as a unit test")
    config.addinivalue_line("markers", "integration: mark test as an integration test")
    config.addinivalue_line("markers", "slow: mark test as slow running")


@pytest.fixture
def rng():
    """Seeded generator so randomized checks are reproducible."""
    return np.random.default_rng(20240607)


@pytest.fixture
def published_geometry():
    """16 x 16 half-wavelength surface of the published experiment."""
    return RisGeometry.half_wavelength(16, 16)


@pytest.fixture
def published_pair():
    """16 x 8 array pair from the binary and quaternary length-8 seeds."""
    u1, w1 = known_golay_pair(8, "binary")
    u2, w2 = known_golay_pair(8, "quaternary")
    return construct_stacked(u1, w1, u2, w2)


@pytest.fixture
def published_aoa():
    """Angle of arrival (-60 deg, 60 deg)."""
    return Direction.from_degrees(-60.0, 60.0)
