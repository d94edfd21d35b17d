"""Use case for sweeping a pattern over an angular grid and exporting it."""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from src.domain.entities.pattern import AngleGrid, PatternMap, Quantity, RippleStats, Scale
from src.domain.entities.scenario import Scenario
from src.domain.interfaces.pattern_exporter import IFigureRenderer, IPatternExporter
from src.domain.interfaces.scenario_repository import IScenarioRepository
from src.domain.services.ris_model import flat_level
from src.domain.services.sweep_engine import ripple_stats, sweep
from src.infrastructure.logging import get_logger_with_context


@dataclass(frozen=True)
class SweepRequest:
    """Inputs of one sweep run; every path is optional."""

    quantity: Quantity = Quantity.TOTAL_AF
    scenario_path: Optional[Path] = None
    grid: Optional[AngleGrid] = None
    scale: Scale = Scale.DB
    csv_path: Optional[Path] = None
    json_path: Optional[Path] = None
    figure_path: Optional[Path] = None
    workers: Optional[int] = None


@dataclass(frozen=True)
class SweepResult:
    """The exported map, statistics of its linear values and the scenario used."""

    pattern: PatternMap
    stats: RippleStats
    scenario: Scenario
    flat_level: float


class SweepPatternUseCase:
    """Use case for evaluating a scenario over a grid."""

    def __init__(
        self,
        scenario_repository: IScenarioRepository,
        exporter: IPatternExporter,
        renderer: IFigureRenderer,
        workers: int = 1,
    ) -> None:
        """
        Initialize use case with dependencies.

        Args:
            scenario_repository: Source of scenarios
            exporter: CSV/JSON writer
            renderer: Heatmap writer
            workers: Default thread count for the sweep
        """
        self._scenario_repository = scenario_repository
        self._exporter = exporter
        self._renderer = renderer
        self._workers = workers

    def execute(self, request: SweepRequest) -> SweepResult:
        """
        Load the scenario, sweep the requested quantity and write the outputs.

        Raises:
            InvalidInputError: On a malformed scenario or grid
        """
        scenario = self._scenario_repository.load(request.scenario_path)
        grid = request.grid or scenario.grid
        workers = request.workers or self._workers
        log = get_logger_with_context(
            __name__, quantity=Quantity(request.quantity).value, config_id=scenario.config_id
        )

        log.info(
            "Sweep started",
            extra={"grid_shape": list(grid.shape), "workers": workers},
        )
        linear = sweep(
            request.quantity,
            scenario.config,
            scenario.geometry,
            grid,
            scenario.aoa,
            scenario.element_gain,
            workers=workers,
            config_id=scenario.config_id,
        )
        stats = ripple_stats(linear)
        pattern = linear.to_scale(request.scale)
        log.info(
            "Sweep finished",
            extra={
                "min": stats.minimum,
                "max": stats.maximum,
                "relative_ripple": stats.relative_ripple,
            },
        )

        if request.csv_path is not None:
            self._exporter.export_csv(pattern, request.csv_path)
        if request.json_path is not None:
            self._exporter.export_json(pattern, request.json_path)
        if request.figure_path is not None:
            self._renderer.render_heatmap(pattern, request.figure_path)

        return SweepResult(
            pattern=pattern,
            stats=stats,
            scenario=scenario,
            flat_level=flat_level(scenario.geometry),
        )
