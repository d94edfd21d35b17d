"""Use case for summarizing a scenario and the seed catalog."""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from src.domain.entities.ris import Direction
from src.domain.entities.scenario import Scenario
from src.domain.entities.sequence import Alphabet, ComplementarityReport
from src.domain.interfaces.scenario_repository import IScenarioRepository
from src.domain.services.golay_array import is_golay_array_pair
from src.domain.services.golay_core import catalog_lengths
from src.domain.services.ris_model import (
    db,
    flat_level,
    received_power,
    total_radiation_pattern,
)


@dataclass(frozen=True)
class ScenarioSummary:
    scenario: Scenario
    catalog: dict[Alphabet, list[int]]
    report: ComplementarityReport
    flat_level: float
    flat_level_db: float
    boresight_received_power: float  # W
    boresight_total_pattern_db: float


class DescribeScenarioUseCase:
    """Use case behind the info subcommand."""

    def __init__(self, scenario_repository: IScenarioRepository) -> None:
        self._scenario_repository = scenario_repository

    def execute(
        self, scenario_path: Optional[Path] = None, max_length: int = 64
    ) -> ScenarioSummary:
        scenario = self._scenario_repository.load(scenario_path)
        cfg = scenario.config
        level = flat_level(scenario.geometry)
        boresight = Direction.boresight()
        return ScenarioSummary(
            scenario=scenario,
            catalog={
                alphabet: catalog_lengths(alphabet, max_length)
                for alphabet in (Alphabet.BINARY, Alphabet.QUATERNARY)
            },
            report=is_golay_array_pair(scenario.pair.u, scenario.pair.w),
            flat_level=level,
            flat_level_db=db(level),
            boresight_received_power=received_power(
                scenario.link_budget,
                cfg,
                scenario.geometry,
                boresight,
                scenario.aoa,
                scenario.element_gain,
            ),
            boresight_total_pattern_db=total_radiation_pattern(
                cfg, scenario.geometry, boresight, scenario.aoa, scenario.element_gain
            ),
        )
