"""Reflecting-surface entities - geometry, directions, configurations and link parameters."""
import math
from dataclasses import dataclass
from enum import Enum

from src.domain.entities.array import ArrayPair, UnimodularArray
from src.domain.exceptions import InvalidInputError

HALF_PI = math.pi / 2
_ANGLE_SLACK = 1e-12


class Polarization(str, Enum):
    """Element polarization."""

    H = "H"
    V = "V"


@dataclass(frozen=True)
class RisGeometry:
    """Uniform planar array with N_y elements per row and N_z (even) per column."""

    n_y: int
    n_z: int
    delta_y: float  # meters
    delta_z: float  # meters
    wavelength: float  # meters

    def __post_init__(self) -> None:
        """Validate entity invariants."""
        if not isinstance(self.n_y, int) or self.n_y < 1:
            raise InvalidInputError("n_y must be a positive integer")
        if not isinstance(self.n_z, int) or self.n_z < 2 or self.n_z % 2:
            raise InvalidInputError("n_z must be an even integer >= 2")
        if min(self.delta_y, self.delta_z, self.wavelength) <= 0:
            raise InvalidInputError("Spacings and wavelength must be positive")

    @classmethod
    def half_wavelength(cls, n_y: int, n_z: int, wavelength: float = 0.01) -> "RisGeometry":
        """Geometry with lambda/2 spacing in both dimensions."""
        return cls(n_y, n_z, wavelength / 2, wavelength / 2, wavelength)

    @property
    def n_z_half(self) -> int:
        """Rows of each polarization's configuration (columns of N_y x N_z/2)."""
        return self.n_z // 2

    @property
    def elements_per_polarization(self) -> int:
        return self.n_y * self.n_z_half

    @property
    def config_dims(self) -> tuple[int, int]:
        return self.n_y, self.n_z_half


@dataclass(frozen=True)
class Direction:
    """Azimuth/elevation pair in radians, each within [-pi/2, pi/2]."""

    azimuth: float
    elevation: float

    def __post_init__(self) -> None:
        """Validate entity invariants."""
        for name, angle in (("azimuth", self.azimuth), ("elevation", self.elevation)):
            if not math.isfinite(angle) or abs(angle) > HALF_PI + _ANGLE_SLACK:
                raise InvalidInputError(f"{name} must lie in [-pi/2, pi/2], got {angle}")

    @classmethod
    def from_degrees(cls, azimuth_deg: float, elevation_deg: float) -> "Direction":
        return cls(math.radians(azimuth_deg), math.radians(elevation_deg))

    @classmethod
    def boresight(cls) -> "Direction":
        return cls(0.0, 0.0)

    @property
    def degrees(self) -> tuple[float, float]:
        return math.degrees(self.azimuth), math.degrees(self.elevation)


@dataclass(frozen=True)
class DualPolConfig:
    """Phase configuration matrices of the H and V polarizations, each N_y x N_z/2."""

    upsilon_h: UnimodularArray
    upsilon_v: UnimodularArray

    def __post_init__(self) -> None:
        """Validate entity invariants."""
        if self.upsilon_h.dims != self.upsilon_v.dims:
            raise InvalidInputError(
                f"Polarization configs differ in dims: {self.upsilon_h.dims} != "
                f"{self.upsilon_v.dims}"
            )

    @classmethod
    def from_array_pair(cls, pair: ArrayPair) -> "DualPolConfig":
        return cls(pair.u, pair.w)

    @property
    def dims(self) -> tuple[int, int]:
        return self.upsilon_h.dims

    def matrix(self, pol: Polarization) -> UnimodularArray:
        return self.upsilon_h if Polarization(pol) is Polarization.H else self.upsilon_v

    def check_geometry(self, geom: RisGeometry) -> None:
        """Raise InvalidInputError unless the configs fit the geometry."""
        if self.dims != geom.config_dims:
            raise InvalidInputError(
                f"Config dims {self.dims} do not match geometry (n_y, n_z/2) = {geom.config_dims}"
            )


@dataclass(frozen=True)
class ElementGainParams:
    """Single-element gain model (radians, dBi, dB)."""

    phi0: float = 0.0
    theta0: float = 0.0
    delta_phi: float = HALF_PI
    delta_theta: float = HALF_PI
    peak_gain_dbi: float = 8.0
    floor_db: float = 30.0

    def __post_init__(self) -> None:
        """Validate entity invariants."""
        if self.delta_phi <= 0 or self.delta_theta <= 0:
            raise InvalidInputError("Beamwidth parameters must be positive")
        if self.floor_db < 0:
            raise InvalidInputError("Floor depth cannot be negative")


@dataclass(frozen=True)
class LinkBudget:
    """Scalar link factors of the two-hop BS -> surface -> user path (linear units)."""

    m: int = 1  # BS antennas
    p_t: float = 1.0  # transmit power, W
    beta1: float = 1.0  # BS -> element path gain
    beta2: float = 1.0  # element -> user path gain
    g_b0: float = 1.0  # BS antenna gain at the departure angle

    def __post_init__(self) -> None:
        """Validate entity invariants."""
        if not isinstance(self.m, int) or self.m < 1:
            raise InvalidInputError("BS antenna count must be a positive integer")
        for name in ("p_t", "beta1", "beta2", "g_b0"):
            if getattr(self, name) <= 0:
                raise InvalidInputError(f"{name} must be positive")

    @property
    def scale(self) -> float:
        return self.m * self.p_t * self.beta1 * self.beta2 * self.g_b0
