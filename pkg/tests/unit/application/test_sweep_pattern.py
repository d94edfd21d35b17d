"""Unit tests for SweepPatternUseCase."""
from pathlib import Path
from unittest.mock import Mock

import numpy as np
import pytest

from src.application.use_cases.sweep_pattern import SweepPatternUseCase, SweepRequest
from src.domain.entities.pattern import Quantity, Scale
from src.domain.entities.ris import ElementGainParams, LinkBudget
from src.domain.entities.scenario import Scenario
from src.domain.interfaces.pattern_exporter import IFigureRenderer, IPatternExporter
from src.domain.interfaces.scenario_repository import IScenarioRepository
from src.domain.services.sweep_engine import make_grid


@pytest.fixture
def scenario(published_geometry, published_pair, published_aoa):
    return Scenario(
        geometry=published_geometry,
        pair=published_pair,
        aoa=published_aoa,
        element_gain=ElementGainParams(),
        link_budget=LinkBudget(),
        grid=make_grid(-0.5, 0.5, 5, -0.2, 0.2, 3),
        config_id="stacked-binary8-quaternary8",
    )


@pytest.fixture
def mock_scenario_repository(scenario):
    repo = Mock(spec=IScenarioRepository)
    repo.load.return_value = scenario
    return repo


@pytest.fixture
def mock_exporter():
    return Mock(spec=IPatternExporter)


@pytest.fixture
def mock_renderer():
    return Mock(spec=IFigureRenderer)


@pytest.fixture
def use_case(mock_scenario_repository, mock_exporter, mock_renderer):
    return SweepPatternUseCase(
        scenario_repository=mock_scenario_repository,
        exporter=mock_exporter,
        renderer=mock_renderer,
        workers=2,
    )


@pytest.mark.unit
class TestSweepPatternUseCase:
    """Tests for SweepPatternUseCase."""

    def test_default_request_sweeps_total_af_in_db(self, use_case, mock_exporter, mock_renderer):
        # Act
        result = use_case.execute(SweepRequest())

        # Assert
        assert result.pattern.quantity is Quantity.TOTAL_AF
        assert result.pattern.scale is Scale.DB
        assert result.pattern.grid.shape == (3, 5)
        np.testing.assert_allclose(result.pattern.values, 10 * np.log10(256.0), atol=1e-9)
        assert result.stats.relative_ripple <= 1e-9
        assert result.flat_level == 256.0
        assert result.pattern.config_id == "stacked-binary8-quaternary8"
        mock_exporter.export_csv.assert_not_called()
        mock_renderer.render_heatmap.assert_not_called()

    def test_outputs_are_written(self, use_case, mock_exporter, mock_renderer):
        # Arrange
        request = SweepRequest(
            quantity=Quantity.AF_H,
            csv_path=Path("out.csv"),
            json_path=Path("out.json"),
            figure_path=Path("out.png"),
        )

        # Act
        result = use_case.execute(request)

        # Assert
        mock_exporter.export_csv.assert_called_once_with(result.pattern, Path("out.csv"))
        mock_exporter.export_json.assert_called_once_with(result.pattern, Path("out.json"))
        mock_renderer.render_heatmap.assert_called_once_with(result.pattern, Path("out.png"))

    def test_grid_override(self, use_case):
        grid = make_grid(0.0, 0.0, 1, 0.0, 0.0, 1)

        result = use_case.execute(SweepRequest(grid=grid))

        assert result.pattern.values.shape == (1, 1)

    def test_linear_scale_and_stats(self, use_case):
        result = use_case.execute(SweepRequest(quantity=Quantity.AF_V, scale=Scale.LINEAR))

        assert result.pattern.scale is Scale.LINEAR
        assert result.stats.maximum == pytest.approx(result.pattern.values.max())
        assert result.stats.relative_ripple > 1e-3

    def test_scenario_path_is_forwarded(self, use_case, mock_scenario_repository):
        use_case.execute(SweepRequest(scenario_path=Path("scenario.json")))

        mock_scenario_repository.load.assert_called_once_with(Path("scenario.json"))
