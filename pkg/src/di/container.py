"""Dependency Injection Container for Clean Architecture."""
import os
from functools import lru_cache
from typing import TYPE_CHECKING, Optional

from src.domain.exceptions import InvalidInputError
from src.domain.services.golay_core import DEFAULT_SEARCH_BUDGET
from src.infrastructure.logging import get_logger

logger = get_logger(__name__)

if TYPE_CHECKING:
    from src.application.use_cases.construct_array_pair import ConstructArrayPairUseCase
    from src.application.use_cases.describe_scenario import DescribeScenarioUseCase
    from src.application.use_cases.search_golay_pairs import SearchGolayPairsUseCase
    from src.application.use_cases.sweep_pattern import SweepPatternUseCase
    from src.application.use_cases.verify_array_pair import VerifyArrayPairUseCase
    from src.domain.interfaces.pair_repository import IPairRepository
    from src.domain.interfaces.pattern_exporter import IFigureRenderer, IPatternExporter
    from src.domain.interfaces.scenario_repository import IScenarioRepository


def _positive_int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise InvalidInputError(f"{name} must be an integer, got {raw!r}") from e
    if value < 1:
        raise InvalidInputError(f"{name} must be at least 1, got {value}")
    return value


class DIContainer:
    """Dependency Injection Container - wires all layers together."""

    def __init__(self) -> None:
        """Initialize container with environment configuration."""
        logger.info("Initializing DI container")

        # Sweep parallelism
        self.threads = _positive_int_env("GOLAYBEAM_THREADS", os.cpu_count() or 1)

        # Exhaustive search cap on alphabet_size**(2*length)
        self.search_budget = _positive_int_env("GOLAYBEAM_SEARCH_BUDGET", DEFAULT_SEARCH_BUDGET)

        # Initialize singletons
        self._pair_repository: Optional["IPairRepository"] = None
        self._scenario_repository: Optional["IScenarioRepository"] = None
        self._pattern_exporter: Optional["IPatternExporter"] = None
        self._figure_renderer: Optional["IFigureRenderer"] = None

        logger.info(
            "DI container initialized",
            extra={"threads": self.threads, "search_budget": self.search_budget},
        )

    # Repositories
    @property
    def pair_repository(self) -> "IPairRepository":
        """Get pair repository instance."""
        if self._pair_repository is None:
            from src.infrastructure.repositories.json_pair_repository import JsonPairRepository

            self._pair_repository = JsonPairRepository()
        return self._pair_repository

    @property
    def scenario_repository(self) -> "IScenarioRepository":
        """Get scenario repository instance."""
        if self._scenario_repository is None:
            from src.infrastructure.repositories.json_scenario_repository import (
                JsonScenarioRepository,
            )

            self._scenario_repository = JsonScenarioRepository(self.pair_repository)
        return self._scenario_repository

    # Services
    @property
    def pattern_exporter(self) -> "IPatternExporter":
        if self._pattern_exporter is None:
            from src.infrastructure.services.csv_json_pattern_exporter import (
                CsvJsonPatternExporter,
            )

            self._pattern_exporter = CsvJsonPatternExporter()
        return self._pattern_exporter

    @property
    def figure_renderer(self) -> "IFigureRenderer":
        """Get heatmap renderer; matplotlib is imported on first use."""
        if self._figure_renderer is None:
            from src.infrastructure.services.matplotlib_heatmap_renderer import (
                MatplotlibHeatmapRenderer,
            )

            logger.info("Creating matplotlib heatmap renderer")
            self._figure_renderer = MatplotlibHeatmapRenderer()
        return self._figure_renderer

    # Use Cases
    def construct_array_pair_use_case(self) -> "ConstructArrayPairUseCase":
        """Get construct array pair use case."""
        from src.application.use_cases.construct_array_pair import ConstructArrayPairUseCase

        return ConstructArrayPairUseCase(pair_repository=self.pair_repository)

    def verify_array_pair_use_case(self) -> "VerifyArrayPairUseCase":
        """Get verify array pair use case."""
        from src.application.use_cases.verify_array_pair import VerifyArrayPairUseCase

        return VerifyArrayPairUseCase(pair_repository=self.pair_repository)

    def sweep_pattern_use_case(self) -> "SweepPatternUseCase":
        """Get sweep pattern use case."""
        from src.application.use_cases.sweep_pattern import SweepPatternUseCase

        return SweepPatternUseCase(
            scenario_repository=self.scenario_repository,
            exporter=self.pattern_exporter,
            renderer=self.figure_renderer,
            workers=self.threads,
        )

    def search_golay_pairs_use_case(self) -> "SearchGolayPairsUseCase":
        """Get search use case."""
        from src.application.use_cases.search_golay_pairs import SearchGolayPairsUseCase

        return SearchGolayPairsUseCase(
            pair_repository=self.pair_repository, budget=self.search_budget
        )

    def describe_scenario_use_case(self) -> "DescribeScenarioUseCase":
        """Get scenario summary use case."""
        from src.application.use_cases.describe_scenario import DescribeScenarioUseCase

        return DescribeScenarioUseCase(scenario_repository=self.scenario_repository)


@lru_cache()
def get_container() -> DIContainer:
    """
    Get singleton DI container instance.

    Returns:
        DIContainer instance
    """
    return DIContainer()
