"""Angular sweep entities - sampling grids, sampled patterns and their statistics."""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.domain.entities.ris import HALF_PI, Direction
from src.domain.exceptions import InvalidInputError


class Quantity(str, Enum):
    """Pattern quantity evaluated by a sweep."""

    TOTAL_AF = "total_af"
    AF_H = "af_h"
    AF_V = "af_v"
    TOTAL_PATTERN = "total_pattern"


class Scale(str, Enum):
    LINEAR = "linear"
    DB = "db"


def _axis(samples: ArrayLike, name: str) -> NDArray[np.float64]:
    arr = np.array(samples, dtype=np.float64).ravel()
    if arr.size == 0:
        raise InvalidInputError(f"{name} samples cannot be empty")
    if np.any(np.abs(arr) > HALF_PI + 1e-12):
        raise InvalidInputError(f"{name} samples must lie in [-pi/2, pi/2]")
    if np.any(np.diff(arr) <= 0):
        raise InvalidInputError(f"{name} samples must be strictly increasing")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class AngleGrid:
    """Azimuth x elevation sampling grid in radians."""

    azimuths: NDArray[np.float64]
    elevations: NDArray[np.float64]

    def __post_init__(self) -> None:
        """Validate entity invariants."""
        object.__setattr__(self, "azimuths", _axis(self.azimuths, "Azimuth"))
        object.__setattr__(self, "elevations", _axis(self.elevations, "Elevation"))

    @property
    def shape(self) -> tuple[int, int]:
        """(n_elevation, n_azimuth), the layout of PatternMap values."""
        return int(self.elevations.size), int(self.azimuths.size)


@dataclass(frozen=True, eq=False)
class PatternMap:
    """Pattern values on an AngleGrid; rows follow elevation, columns azimuth."""

    grid: AngleGrid
    values: NDArray[np.float64] = field(repr=False)
    quantity: Quantity
    scale: Scale = Scale.LINEAR
    config_id: str = ""
    aoa: Optional[Direction] = None

    def __post_init__(self) -> None:
        """Validate entity invariants."""
        arr = np.array(self.values, dtype=np.float64)
        if arr.shape != self.grid.shape:
            raise InvalidInputError(
                f"Value grid shape {arr.shape} does not match grid {self.grid.shape}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def to_db(self) -> "PatternMap":
        """Same map in dB; nonpositive linear values map to -inf."""
        if self.scale is Scale.DB:
            return self
        with np.errstate(divide="ignore"):
            values = 10.0 * np.log10(self.values)
        return PatternMap(self.grid, values, self.quantity, Scale.DB, self.config_id, self.aoa)

    def to_scale(self, scale: Scale | str) -> "PatternMap":
        scale = Scale(scale)
        if scale is self.scale:
            return self
        if scale is Scale.DB:
            return self.to_db()
        return PatternMap(
            self.grid, 10.0 ** (self.values / 10.0), self.quantity, Scale.LINEAR,
            self.config_id, self.aoa,
        )


@dataclass(frozen=True)
class RippleStats:
    """Spread of a PatternMap.

    For linear maps ripple_db is 10*log10(max/min); for dB maps it is max - min.
    relative_ripple is max |v - mean| / |mean|.
    """

    minimum: float
    maximum: float
    mean: float
    max_abs_deviation: float
    scale: Scale

    @property
    def relative_ripple(self) -> float:
        return self.max_abs_deviation / abs(self.mean) if self.mean else math.inf

    @property
    def ripple_db(self) -> float:
        if self.scale is Scale.DB:
            return self.maximum - self.minimum
        if self.minimum <= 0:
            raise InvalidInputError("ripple_db is undefined for nonpositive linear values")
        return 10.0 * math.log10(self.maximum / self.minimum)
