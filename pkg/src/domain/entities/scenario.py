"""Scenario entity - everything needed to evaluate one surface deployment."""
from dataclasses import dataclass

from src.domain.entities.array import ArrayPair
from src.domain.entities.pattern import AngleGrid
from src.domain.entities.ris import (
    Direction,
    DualPolConfig,
    ElementGainParams,
    LinkBudget,
    RisGeometry,
)


@dataclass(frozen=True, eq=False)
class Scenario:
    """Surface geometry, configuration pair, incidence, gain model, link and sweep grid."""

    geometry: RisGeometry
    pair: ArrayPair
    aoa: Direction
    element_gain: ElementGainParams
    link_budget: LinkBudget
    grid: AngleGrid
    config_id: str = ""

    def __post_init__(self) -> None:
        """Validate entity invariants."""
        self.config.check_geometry(self.geometry)

    @property
    def config(self) -> DualPolConfig:
        return DualPolConfig.from_array_pair(self.pair)
