"""Heatmap rendering of sampled patterns with matplotlib."""
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from src.domain.entities.pattern import PatternMap, Quantity, Scale  # noqa: E402
from src.domain.exceptions import InvalidInputError  # noqa: E402
from src.domain.interfaces.pattern_exporter import IFigureRenderer  # noqa: E402
from src.infrastructure.logging import get_logger  # noqa: E402

logger = get_logger(__name__)

SUPPORTED_FORMATS = (".png", ".svg")

_TITLES = {
    Quantity.TOTAL_AF: "Power-domain array factor",
    Quantity.AF_H: "Array factor (H polarization)",
    Quantity.AF_V: "Array factor (V polarization)",
    Quantity.TOTAL_PATTERN: "Total radiation pattern",
}


class MatplotlibHeatmapRenderer(IFigureRenderer):
    """Azimuth x elevation heatmaps, one figure per call."""

    def __init__(self, cmap: str = "viridis", dpi: int = 150):
        self.cmap = cmap
        self.dpi = dpi

    def render_heatmap(self, pattern: PatternMap, path: Path) -> None:
        path = Path(path)
        if path.suffix.lower() not in SUPPORTED_FORMATS:
            raise InvalidInputError(
                f"Unsupported figure format {path.suffix!r}; use one of {SUPPORTED_FORMATS}"
            )

        az = pattern.grid.azimuths
        el = pattern.grid.elevations
        extent = [
            math.degrees(az[0]),
            math.degrees(az[-1]),
            math.degrees(el[0]),
            math.degrees(el[-1]),
        ]

        fig, ax = plt.subplots(figsize=(8, 5))
        try:
            image = ax.imshow(
                pattern.values,
                origin="lower",
                aspect="auto",
                extent=extent,
                cmap=self.cmap,
                interpolation="nearest",
            )
            colorbar = fig.colorbar(image, ax=ax)
            colorbar.set_label("dB" if pattern.scale is Scale.DB else "linear")
            ax.set_xlabel("Azimuth (deg)")
            ax.set_ylabel("Elevation (deg)")
            title = _TITLES[pattern.quantity]
            if pattern.config_id:
                title = f"{title} - {pattern.config_id}"
            ax.set_title(title)
            fig.tight_layout()
            path.parent.mkdir(parents=True, exist_ok=True)
            fig.savefig(path, dpi=self.dpi)
        except OSError as e:
            logger.error("Cannot write figure", extra={"path": str(path), "error": str(e)})
            raise InvalidInputError(f"Cannot write {path}: {e}") from e
        finally:
            plt.close(fig)

        logger.info(
            "Heatmap rendered", extra={"path": str(path), "quantity": pattern.quantity.value}
        )
