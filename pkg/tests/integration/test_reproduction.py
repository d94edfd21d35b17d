"""End-to-end checks of the broad-beam property on the published configuration."""
import math

import numpy as np
import pytest

from src.di.container import get_container
from src.domain.entities.pattern import Quantity
from src.domain.entities.ris import Direction, DualPolConfig, ElementGainParams
from src.domain.services.golay_array import is_golay_array_pair
from src.domain.services.ris_model import (
    element_gain_db,
    flat_level,
    total_radiation_pattern,
)
from src.domain.services.sweep_engine import make_grid, ripple_stats, sweep
from src.presentation.cli.main import EXIT_OK, main

FLAT_DB = 10 * math.log10(256)


@pytest.fixture
def published_config(published_pair):
    return DualPolConfig.from_array_pair(published_pair)


@pytest.fixture
def default_grid():
    """-60..60 deg azimuth (181 points) by -30..30 deg elevation (61 points)."""
    return make_grid(-math.pi / 3, math.pi / 3, 181, -math.pi / 6, math.pi / 6, 61)


@pytest.mark.integration
class TestBroadBeam:
    """The total array factor of a complementary configuration is flat."""

    def test_flat_at_published_level(self, published_config, published_geometry, published_aoa,
                                     default_grid):
        # Act
        pattern = sweep(Quantity.TOTAL_AF, published_config, published_geometry, default_grid,
                        published_aoa).to_db()

        # Assert
        stats = ripple_stats(pattern)
        assert flat_level(published_geometry) == 256.0
        assert stats.minimum == pytest.approx(FLAT_DB, abs=1e-6)
        assert stats.maximum == pytest.approx(FLAT_DB, abs=1e-6)
        assert FLAT_DB == pytest.approx(24.0824, abs=1e-4)

    @pytest.mark.slow
    def test_flat_over_full_range_for_random_incidence(self, published_config, published_geometry,
                                                       rng):
        grid = make_grid(-math.pi / 2, math.pi / 2, 181, -math.pi / 2, math.pi / 2, 181)

        for az, el in rng.uniform(-math.pi / 2, math.pi / 2, size=(10, 2)):
            pattern = sweep(Quantity.TOTAL_AF, published_config, published_geometry, grid,
                            Direction(float(az), float(el)), workers=4)
            assert ripple_stats(pattern).relative_ripple <= 1e-9

    def test_each_polarization_alone_is_not_flat(self, published_config, published_geometry,
                                                 published_aoa, default_grid):
        for quantity in (Quantity.AF_H, Quantity.AF_V):
            pattern = sweep(quantity, published_config, published_geometry, default_grid,
                            published_aoa)
            stats = ripple_stats(pattern)
            contrast_db = 10 * math.log10(stats.maximum / max(stats.minimum, 1e-300))
            print(f"{quantity.value} contrast: {contrast_db:.2f} dB")
            assert contrast_db >= 10.0

    def test_polarizations_sum_to_flat_level(self, published_config, published_geometry,
                                             published_aoa, default_grid):
        af_h = sweep("af_h", published_config, published_geometry, default_grid, published_aoa)
        af_v = sweep("af_v", published_config, published_geometry, default_grid, published_aoa)

        np.testing.assert_allclose(af_h.values + af_v.values, 256.0, rtol=1e-10)


@pytest.mark.integration
class TestRadiationPattern:
    """Total pattern is the flat level shaped only by the element gains."""

    def test_pattern_minus_gains_is_flat(self, published_config, published_geometry,
                                         published_aoa, default_grid):
        params = ElementGainParams()

        pattern = sweep(Quantity.TOTAL_PATTERN, published_config, published_geometry,
                        default_grid, published_aoa, params).to_db()

        az, el = np.meshgrid(default_grid.azimuths, default_grid.elevations)
        gains = element_gain_db(published_aoa.azimuth, published_aoa.elevation, params)
        offset = pattern.values - gains - element_gain_db(az, el, params)
        np.testing.assert_allclose(offset, FLAT_DB, atol=1e-9)

    def test_boresight_peak(self, published_config, published_geometry):
        boresight = Direction.boresight()

        value = total_radiation_pattern(published_config, published_geometry, boresight,
                                        boresight, ElementGainParams())

        assert value == pytest.approx(40.0824, abs=1e-4)


@pytest.mark.integration
class TestNonComplementaryConfiguration:
    """A perturbed configuration is neither complementary nor flat."""

    def test_single_phase_error_breaks_flatness(self, published_pair, published_geometry,
                                                published_aoa, default_grid):
        # Arrange
        perturbed = published_pair._replace(u=published_pair.u.with_phase_offset(3, 2, math.pi / 7))

        # Act
        report = is_golay_array_pair(perturbed.u, perturbed.w)
        pattern = sweep(Quantity.TOTAL_AF, DualPolConfig.from_array_pair(perturbed),
                        published_geometry, default_grid, published_aoa)

        # Assert
        assert not report
        assert ripple_stats(pattern).relative_ripple > 1e-3


@pytest.mark.integration
class TestCommandLine:
    """Workflows through the installed entry point."""

    @pytest.fixture(autouse=True)
    def fresh_container(self, monkeypatch):
        monkeypatch.delenv("GOLAYBEAM_THREADS", raising=False)
        get_container.cache_clear()
        yield
        get_container.cache_clear()

    def test_sweep_output_independent_of_threads(self, tmp_path):
        outputs = []
        for threads in ("1", "2", "8"):
            path = tmp_path / f"map_{threads}.csv"
            code = main(["sweep", "--grid", "-60,60,37,-30,30,13", "--quantity", "total_pattern",
                         "--threads", threads, "--csv", str(path)])
            assert code == EXIT_OK
            outputs.append(path.read_bytes())

        assert outputs[0] == outputs[1] == outputs[2]
        assert outputs[0].count(b"\n") == 1 + 37 * 13

    def test_construct_then_verify(self, tmp_path):
        path = tmp_path / "pair.json"

        assert main(["construct", "--l1", "26", "--l2", "10", "--layout", "concat",
                     "--out", str(path)]) == EXIT_OK
        assert main(["verify", "--pair", str(path)]) == EXIT_OK

    def test_scenario_with_pair_file(self, tmp_path, capsys):
        main(["construct", "--l1", "8", "--l2", "8", "--alphabet2", "quaternary",
              "--out", str(tmp_path / "published.json")])
        scenario = tmp_path / "scenario.json"
        scenario.write_text('{"config": {"pair_file": "published.json"}}')
        capsys.readouterr()

        code = main(["info", "--scenario", str(scenario)])

        stdout = capsys.readouterr().out
        assert code == EXIT_OK
        assert "config: published (16x8 per polarization)" in stdout
        assert "complementary: PASS" in stdout
