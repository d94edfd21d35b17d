"""Dense angular-grid evaluation of array factors and radiation patterns."""
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from src.domain.entities.pattern import AngleGrid, PatternMap, Quantity, RippleStats, Scale
from src.domain.entities.ris import (
    HALF_PI,
    Direction,
    DualPolConfig,
    ElementGainParams,
    RisGeometry,
)
from src.domain.exceptions import InvalidInputError
from src.domain.services.ris_model import element_gain, element_gain_db, polarization_responses


def make_grid(
    az_min: float, az_max: float, n_az: int, el_min: float, el_max: float, n_el: int
) -> AngleGrid:
    """
    Uniform grid with inclusive endpoints; counts, not steps, define the sampling.

    Raises:
        InvalidInputError: On inverted or out-of-range bounds or counts below 1
    """
    for name, lo, hi, n in (("azimuth", az_min, az_max, n_az), ("elevation", el_min, el_max, n_el)):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise InvalidInputError(f"{name} count must be a positive integer")
        if lo > hi:
            raise InvalidInputError(f"{name} bounds are inverted: {lo} > {hi}")
        if min(lo, hi) < -HALF_PI - 1e-12 or max(lo, hi) > HALF_PI + 1e-12:
            raise InvalidInputError(f"{name} bounds must lie in [-pi/2, pi/2]")
        if n > 1 and lo == hi:
            raise InvalidInputError(f"{name} needs distinct bounds for {n} samples")
    return AngleGrid(np.linspace(az_min, az_max, n_az), np.linspace(el_min, el_max, n_el))


def _row(
    quantity: Quantity,
    cfg: DualPolConfig,
    geom: RisGeometry,
    grid: AngleGrid,
    elevation: float,
    aoa: Direction,
    params: ElementGainParams,
) -> NDArray[np.float64]:
    af_h, af_v = polarization_responses(cfg, geom, grid.azimuths, elevation, aoa)
    if quantity is Quantity.AF_H:
        return af_h
    if quantity is Quantity.AF_V:
        return af_v
    total = af_h + af_v
    if quantity is Quantity.TOTAL_AF:
        return total
    gains_db = element_gain(aoa, params) + element_gain_db(grid.azimuths, elevation, params)
    return total * 10.0 ** (gains_db / 10.0)


def sweep(
    quantity: Quantity | str,
    cfg: DualPolConfig,
    geom: RisGeometry,
    grid: AngleGrid,
    aoa: Direction,
    params: Optional[ElementGainParams] = None,
    *,
    workers: int = 1,
    config_id: str = "",
) -> PatternMap:
    """
    Evaluate a quantity at every grid point, in linear units.

    Each elevation row is one task; the result is identical for any worker count.

    Raises:
        InvalidInputError: If the config does not fit the geometry or workers < 1
    """
    quantity = Quantity(quantity)
    params = params or ElementGainParams()
    cfg.check_geometry(geom)
    if workers < 1:
        raise InvalidInputError("workers must be at least 1")

    def evaluate(elevation: float) -> NDArray[np.float64]:
        return _row(quantity, cfg, geom, grid, float(elevation), aoa, params)

    if workers == 1:
        rows = [evaluate(el) for el in grid.elevations]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(evaluate, grid.elevations))

    return PatternMap(
        grid=grid,
        values=np.vstack(rows),
        quantity=quantity,
        scale=Scale.LINEAR,
        config_id=config_id,
        aoa=aoa,
    )


def ripple_stats(pattern: PatternMap) -> RippleStats:
    """Min, max, mean and spread of a map (see RippleStats for definitions)."""
    values = pattern.values
    if values.size == 0:
        raise InvalidInputError("Pattern map is empty")
    mean = float(np.mean(values))
    return RippleStats(
        minimum=float(np.min(values)),
        maximum=float(np.max(values)),
        mean=mean,
        max_abs_deviation=float(np.max(np.abs(values - mean))),
        scale=pattern.scale,
    )
