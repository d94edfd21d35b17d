"""JSON scenario repository implementation."""
import math
from pathlib import Path
from typing import Optional

from src.domain.entities.array import ArrayPair
from src.domain.entities.pattern import AngleGrid
from src.domain.entities.ris import Direction, ElementGainParams, LinkBudget, RisGeometry
from src.domain.entities.scenario import Scenario
from src.domain.interfaces.pair_repository import IPairRepository
from src.domain.interfaces.scenario_repository import IScenarioRepository
from src.domain.services.golay_array import construct
from src.domain.services.golay_core import known_golay_pair
from src.domain.services.sweep_engine import make_grid
from src.infrastructure.logging import get_logger
from src.infrastructure.repositories.json_pair_repository import (
    array_pair_from_schema,
    read_model,
)
from src.infrastructure.repositories.schemas import ConfigSource, ScenarioFile, SeedSpec

logger = get_logger(__name__)


def seed_config_id(seeds: SeedSpec) -> str:
    """Stable identifier such as ``stacked-binary8-quaternary8``."""
    return (
        f"{seeds.layout.value}-{seeds.alphabet1.value}{seeds.l1}"
        f"-{seeds.alphabet2.value}{seeds.l2}"
    )


def pair_from_seeds(seeds: SeedSpec) -> ArrayPair:
    """Build the configuration pair from two cataloged seeds."""
    u1, w1 = known_golay_pair(seeds.l1, seeds.alphabet1)
    u2, w2 = known_golay_pair(seeds.l2, seeds.alphabet2)
    return construct(seeds.layout, u1, w1, u2, w2)


class JsonScenarioRepository(IScenarioRepository):
    """Scenario files in JSON; angles in degrees, lengths in meters."""

    def __init__(self, pair_repository: IPairRepository):
        """
        Initialize repository.

        Args:
            pair_repository: Used to read configuration pairs referenced by path
        """
        self.pair_repository = pair_repository

    def load(self, path: Optional[Path] = None) -> Scenario:
        """Load a scenario file, or the default scenario when path is None."""
        if path is None:
            schema = ScenarioFile()
            base = Path.cwd()
        else:
            schema = read_model(Path(path), ScenarioFile)
            base = Path(path).parent

        pair, config_id = self._resolve_pair(schema.config, base)
        scenario = Scenario(
            geometry=RisGeometry(**schema.geometry.model_dump()),
            pair=pair,
            aoa=Direction.from_degrees(schema.aoa.azimuth, schema.aoa.elevation),
            element_gain=self._gain_params(schema),
            link_budget=LinkBudget(**schema.link_budget.model_dump()),
            grid=self._grid(schema),
            config_id=config_id,
        )

        logger.info(
            "Scenario loaded",
            extra={
                "path": str(path) if path else "<default>",
                "config_id": config_id,
                "dims": list(pair.dims),
                "grid_shape": list(scenario.grid.shape),
            },
        )
        return scenario

    def _resolve_pair(self, source: ConfigSource, base: Path) -> tuple[ArrayPair, str]:
        if source.inline is not None:
            return array_pair_from_schema(source.inline), "inline"
        if source.pair_file is not None:
            pair_path = Path(source.pair_file)
            if not pair_path.is_absolute():
                pair_path = base / pair_path
            return self.pair_repository.load_array_pair(pair_path), pair_path.stem
        seeds = source.seeds or SeedSpec()
        return pair_from_seeds(seeds), seed_config_id(seeds)

    @staticmethod
    def _gain_params(schema: ScenarioFile) -> ElementGainParams:
        g = schema.element_gain
        return ElementGainParams(
            phi0=math.radians(g.phi0),
            theta0=math.radians(g.theta0),
            delta_phi=math.radians(g.delta_phi),
            delta_theta=math.radians(g.delta_theta),
            peak_gain_dbi=g.peak_gain_dbi,
            floor_db=g.floor_db,
        )

    @staticmethod
    def _grid(schema: ScenarioFile) -> AngleGrid:
        g = schema.grid
        return make_grid(
            math.radians(g.az_min),
            math.radians(g.az_max),
            g.n_az,
            math.radians(g.el_min),
            math.radians(g.el_max),
            g.n_el,
        )
