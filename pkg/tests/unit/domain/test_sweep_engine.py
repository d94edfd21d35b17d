"""Unit tests for the sweep engine."""
import math

import numpy as np
import pytest

from src.domain.entities.array import UnimodularArray
from src.domain.entities.pattern import Quantity, Scale
from src.domain.entities.ris import Direction, DualPolConfig, ElementGainParams
from src.domain.exceptions import InvalidInputError
from src.domain.services.ris_model import (
    configure_from_array_pair,
    element_gain,
    per_polarization_array_factor,
    total_radiation_pattern,
)
from src.domain.services.sweep_engine import make_grid, ripple_stats, sweep

FLAT = 256.0


@pytest.fixture
def config(published_pair, published_geometry):
    return configure_from_array_pair(published_pair, published_geometry)


@pytest.fixture
def small_grid():
    return make_grid(-0.8, 0.8, 9, -0.4, 0.5, 5)


@pytest.mark.unit
class TestMakeGrid:
    """Tests for grid construction."""

    def test_inclusive_endpoints(self):
        grid = make_grid(-1.0, 1.0, 5, 0.0, 0.0, 1)

        assert grid.azimuths.tolist() == [-1.0, -0.5, 0.0, 0.5, 1.0]
        assert grid.elevations.tolist() == [0.0]
        assert grid.shape == (1, 5)

    def test_inverted_bounds_rejected(self):
        with pytest.raises(InvalidInputError, match="inverted"):
            make_grid(1.0, -1.0, 3, 0.0, 0.0, 1)

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidInputError, match="must lie in"):
            make_grid(-2.0, 0.0, 3, 0.0, 0.0, 1)

    @pytest.mark.parametrize("count", [0, -1, 2.5])
    def test_bad_count_rejected(self, count):
        with pytest.raises(InvalidInputError, match="positive integer"):
            make_grid(-1.0, 1.0, count, 0.0, 0.0, 1)

    def test_equal_bounds_need_single_sample(self):
        with pytest.raises(InvalidInputError, match="distinct bounds"):
            make_grid(0.0, 0.0, 3, 0.0, 0.0, 1)

    def test_full_range(self):
        grid = make_grid(-math.pi / 2, math.pi / 2, 181, -math.pi / 2, math.pi / 2, 181)

        assert grid.shape == (181, 181)


@pytest.mark.unit
class TestSweep:
    """Tests for grid evaluation."""

    def test_total_af_is_flat(self, config, published_geometry, small_grid, published_aoa):
        pattern = sweep("total_af", config, published_geometry, small_grid, published_aoa)

        assert pattern.quantity is Quantity.TOTAL_AF
        assert pattern.scale is Scale.LINEAR
        assert pattern.values.shape == (5, 9)
        np.testing.assert_allclose(pattern.values, FLAT, rtol=1e-12)

    def test_per_polarization_matches_pointwise(
        self, config, published_geometry, small_grid, published_aoa
    ):
        pattern = sweep(Quantity.AF_V, config, published_geometry, small_grid, published_aoa)

        i, j = 3, 6
        d = Direction(float(small_grid.azimuths[j]), float(small_grid.elevations[i]))
        expected = per_polarization_array_factor(
            config, published_geometry, d, published_aoa, "V"
        )
        assert pattern.values[i, j] == pytest.approx(expected)

    def test_total_pattern_matches_pointwise(
        self, config, published_geometry, small_grid, published_aoa
    ):
        params = ElementGainParams()

        pattern = sweep(
            Quantity.TOTAL_PATTERN, config, published_geometry, small_grid, published_aoa, params
        ).to_db()

        for i, j in [(0, 0), (2, 4), (4, 8)]:
            d = Direction(float(small_grid.azimuths[j]), float(small_grid.elevations[i]))
            expected = total_radiation_pattern(config, published_geometry, d, published_aoa, params)
            assert pattern.values[i, j] == pytest.approx(expected, abs=1e-9)

    def test_total_pattern_lifts_by_aoa_gain(
        self, config, published_geometry, small_grid, published_aoa
    ):
        params = ElementGainParams()
        pattern = sweep(
            Quantity.TOTAL_PATTERN, config, published_geometry, small_grid, published_aoa, params
        ).to_db()

        center = pattern.values[2, 4] - element_gain(
            Direction(float(small_grid.azimuths[4]), float(small_grid.elevations[2])), params
        )

        assert center == pytest.approx(
            10 * math.log10(FLAT) + element_gain(published_aoa, params), abs=1e-9
        )

    @pytest.mark.parametrize("workers", [2, 3, 8])
    def test_worker_count_does_not_change_values(
        self, config, published_geometry, small_grid, published_aoa, workers
    ):
        single = sweep("af_h", config, published_geometry, small_grid, published_aoa)
        parallel = sweep(
            "af_h", config, published_geometry, small_grid, published_aoa, workers=workers
        )

        assert np.array_equal(single.values, parallel.values)

    def test_single_point_grid(self, config, published_geometry, published_aoa):
        grid = make_grid(0.0, 0.0, 1, 0.0, 0.0, 1)

        pattern = sweep("total_af", config, published_geometry, grid, published_aoa)

        assert pattern.values.shape == (1, 1)

    def test_config_must_fit_geometry(self, published_geometry, small_grid, published_aoa):
        cfg = DualPolConfig(UnimodularArray(np.zeros((4, 2))), UnimodularArray(np.zeros((4, 2))))

        with pytest.raises(InvalidInputError):
            sweep("total_af", cfg, published_geometry, small_grid, published_aoa)

    def test_workers_must_be_positive(self, config, published_geometry, small_grid, published_aoa):
        with pytest.raises(InvalidInputError, match="workers"):
            sweep("total_af", config, published_geometry, small_grid, published_aoa, workers=0)

    def test_unknown_quantity_rejected(self, config, published_geometry, small_grid, published_aoa):
        with pytest.raises(ValueError):
            sweep("gain", config, published_geometry, small_grid, published_aoa)


@pytest.mark.unit
class TestRippleStats:
    def test_flat_map_has_no_ripple(self, config, published_geometry, small_grid, published_aoa):
        stats = ripple_stats(
            sweep("total_af", config, published_geometry, small_grid, published_aoa)
        )

        assert stats.mean == pytest.approx(FLAT)
        assert stats.relative_ripple <= 1e-9
        assert stats.ripple_db <= 1e-9

    def test_single_polarization_has_ripple(
        self, config, published_geometry, small_grid, published_aoa
    ):
        stats = ripple_stats(sweep("af_h", config, published_geometry, small_grid, published_aoa))

        assert stats.maximum > stats.minimum
        assert stats.relative_ripple > 1e-3
