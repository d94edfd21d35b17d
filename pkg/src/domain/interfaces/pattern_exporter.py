"""Pattern exporter interface - defines contract for sweep result files."""
from abc import ABC, abstractmethod
from pathlib import Path

from src.domain.entities.pattern import PatternMap


class IPatternExporter(ABC):
    """Interface for writing sampled patterns."""

    @abstractmethod
    def export_csv(self, pattern: PatternMap, path: Path) -> None:
        """
        Write the map as CSV with header ``azimuth_deg,elevation_deg,value``.

        Rows are ordered elevation-major; output bytes depend only on the values.
        """
        pass

    @abstractmethod
    def export_json(self, pattern: PatternMap, path: Path) -> None:
        """Write the map as JSON with explicit azimuth and elevation axes."""
        pass


class IFigureRenderer(ABC):
    """Interface for rendering patterns as images."""

    @abstractmethod
    def render_heatmap(self, pattern: PatternMap, path: Path) -> None:
        """
        Render azimuth on x, elevation on y and a colorbar for the values.

        Args:
            pattern: Map to render (already in the desired scale)
            path: Destination image; the suffix selects the format (.png, .svg)
        """
        pass
