"""CSV and JSON exporter for sampled patterns."""
import csv
import json
import math
from pathlib import Path

import numpy as np

from src.domain.entities.pattern import PatternMap
from src.domain.exceptions import InvalidInputError
from src.domain.interfaces.pattern_exporter import IPatternExporter
from src.infrastructure.logging import get_logger
from src.infrastructure.repositories.schemas import PatternMapFile

logger = get_logger(__name__)

CSV_HEADER = ("azimuth_deg", "elevation_deg", "value")


def _degrees(radians: np.ndarray) -> list[float]:
    return [math.degrees(float(a)) for a in radians]


class CsvJsonPatternExporter(IPatternExporter):
    """Writes PatternMaps as CSV rows or a JSON document with axes."""

    def export_csv(self, pattern: PatternMap, path: Path) -> None:
        """
        One row per grid point, elevation-major, azimuth-minor.

        Floats are written with repr so identical maps give identical bytes.
        """
        path = Path(path)
        azimuths = _degrees(pattern.grid.azimuths)
        elevations = _degrees(pattern.grid.elevations)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with path.open("w", newline="", encoding="utf-8") as handle:
                writer = csv.writer(handle, lineterminator="\n")
                writer.writerow(CSV_HEADER)
                for i, el in enumerate(elevations):
                    for j, az in enumerate(azimuths):
                        writer.writerow((repr(az), repr(el), repr(float(pattern.values[i, j]))))
        except OSError as e:
            logger.error("Cannot write CSV", extra={"path": str(path), "error": str(e)})
            raise InvalidInputError(f"Cannot write {path}: {e}") from e

        logger.info(
            "Pattern exported",
            extra={"path": str(path), "format": "csv", "points": int(pattern.values.size)},
        )

    def export_json(self, pattern: PatternMap, path: Path) -> None:
        path = Path(path)
        document = PatternMapFile(
            quantity=pattern.quantity,
            scale=pattern.scale,
            config_id=pattern.config_id,
            aoa_deg=pattern.aoa.degrees if pattern.aoa else None,
            azimuth_deg=_degrees(pattern.grid.azimuths),
            elevation_deg=_degrees(pattern.grid.elevations),
            values=pattern.values.tolist(),
        )
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(
                json.dumps(document.model_dump(mode="json"), indent=2) + "\n", encoding="utf-8"
            )
        except OSError as e:
            logger.error("Cannot write JSON", extra={"path": str(path), "error": str(e)})
            raise InvalidInputError(f"Cannot write {path}: {e}") from e

        logger.info("Pattern exported", extra={"path": str(path), "format": "json"})
