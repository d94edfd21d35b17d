"""Unimodular sequence entities - phase-angle storage with exact materialization."""
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.domain.exceptions import InvalidInputError

_QUARTER_TURN = np.pi / 2
_QUATERNARY_POINTS = np.array([1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j])
_SNAP_TOL = 1e-12


class Alphabet(str, Enum):
    """Phase alphabet of a sequence or array."""

    BINARY = "binary"
    QUATERNARY = "quaternary"
    POLYPHASE = "polyphase"

    @property
    def size(self) -> int | None:
        """Number of phase points, None for an unrestricted alphabet."""
        return {Alphabet.BINARY: 2, Alphabet.QUATERNARY: 4}.get(self)

    @classmethod
    def from_size(cls, size: int) -> "Alphabet":
        """Map 2 -> binary, 4 -> quaternary."""
        if size == 2:
            return cls.BINARY
        if size == 4:
            return cls.QUATERNARY
        raise InvalidInputError(f"Alphabet size must be 2 or 4, got {size}")


def _quarter_turns(phases: NDArray[np.float64]) -> tuple[NDArray[np.int64], NDArray[np.bool_]]:
    turns = phases / _QUARTER_TURN
    nearest = np.rint(turns)
    return nearest.astype(np.int64), np.abs(turns - nearest) <= _SNAP_TOL


def materialize(phases: ArrayLike) -> NDArray[np.complex128]:
    """
    Turn phase angles into unit-modulus complex values.

    Multiples of pi/2 map to the exact points {1, j, -1, -j} so that binary and
    quaternary correlations are computed without rounding error.
    """
    phases = np.asarray(phases, dtype=np.float64)
    values = np.exp(1j * phases)
    turns, on_grid = _quarter_turns(phases)
    values[on_grid] = _QUATERNARY_POINTS[np.mod(turns[on_grid], 4)]
    return values


def infer_alphabet(phases: ArrayLike) -> Alphabet:
    """Smallest alphabet containing every phase."""
    turns, on_grid = _quarter_turns(np.asarray(phases, dtype=np.float64))
    if not on_grid.all():
        return Alphabet.POLYPHASE
    if np.all(np.mod(turns, 2) == 0):
        return Alphabet.BINARY
    return Alphabet.QUATERNARY


def freeze_phases(phases: ArrayLike, ndim: int) -> NDArray[np.float64]:
    arr = np.array(phases, dtype=np.float64)
    if arr.ndim != ndim:
        raise InvalidInputError(f"Phases must be {ndim}-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise InvalidInputError("Phase container cannot be empty")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("Phases must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class UnimodularSequence:
    """Finite sequence of unit-modulus entries, stored as phase angles in radians."""

    phases: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        """Validate entity invariants."""
        object.__setattr__(self, "phases", freeze_phases(self.phases, 1))

    @classmethod
    def from_values(cls, values: ArrayLike) -> "UnimodularSequence":
        """Build from complex entries; each must have modulus 1."""
        values = np.asarray(values, dtype=np.complex128)
        if values.ndim != 1 or values.size == 0:
            raise InvalidInputError("Sequence values must be a nonempty 1D array")
        if np.any(np.abs(np.abs(values) - 1.0) > 1e-12):
            raise InvalidInputError("Sequence entries must have unit modulus")
        return cls(np.angle(values))

    @classmethod
    def from_indices(cls, indices: Sequence[int], alphabet_size: int) -> "UnimodularSequence":
        """Build from alphabet indices k, entry k maps to phase 2*pi*k/alphabet_size."""
        return cls(2 * np.pi * np.asarray(indices, dtype=np.float64) / alphabet_size)

    @property
    def values(self) -> NDArray[np.complex128]:
        """Complex entries e^{j*phase}."""
        return materialize(self.phases)

    @property
    def alphabet(self) -> Alphabet:
        return infer_alphabet(self.phases)

    def __len__(self) -> int:
        return int(self.phases.size)

    def __repr__(self) -> str:
        return f"UnimodularSequence(N={len(self)}, alphabet={self.alphabet.value})"


class SequencePair(NamedTuple):
    """Two equal-length sequences treated as a candidate complementary pair."""

    u: UnimodularSequence
    w: UnimodularSequence


@dataclass(frozen=True, eq=False)
class CorrelationFunction:
    """Aperiodic autocorrelation indexed by integer lag in [-(N-1), N-1]."""

    values: NDArray[np.complex128] = field(repr=False)

    def __post_init__(self) -> None:
        """Validate entity invariants."""
        arr = np.array(self.values, dtype=np.complex128)
        if arr.ndim != 1 or arr.size % 2 == 0:
            raise InvalidInputError("Correlation values must have odd length 2N-1")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def max_lag(self) -> int:
        return (self.values.size - 1) // 2

    @property
    def lags(self) -> NDArray[np.int64]:
        return np.arange(-self.max_lag, self.max_lag + 1)

    def __getitem__(self, tau: int) -> complex:
        if abs(tau) > self.max_lag:
            return 0j
        return complex(self.values[tau + self.max_lag])

    def __add__(self, other: "CorrelationFunction") -> "CorrelationFunction":
        if other.values.shape != self.values.shape:
            raise InvalidInputError("Correlation functions must share the lag range")
        return CorrelationFunction(self.values + other.values)


@dataclass(frozen=True)
class ComplementarityReport:
    """Outcome of a Golay complementarity test."""

    is_complementary: bool
    max_off_peak: float
    peak_deviation: float
    tolerance: float

    @property
    def max_deviation(self) -> float:
        """Largest violation of the delta-sum condition over all lags."""
        return max(self.max_off_peak, self.peak_deviation)

    def __bool__(self) -> bool:
        return self.is_complementary
