"""Unimodular array entities - two-dimensional counterparts of the sequence types."""
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.domain.entities.sequence import Alphabet, freeze_phases, infer_alphabet, materialize
from src.domain.exceptions import InvalidInputError


@dataclass(frozen=True, eq=False)
class UnimodularArray:
    """N1 x N2 grid of unit-modulus entries stored as phase angles in radians."""

    phases: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        """Validate entity invariants."""
        object.__setattr__(self, "phases", freeze_phases(self.phases, 2))

    @classmethod
    def from_values(cls, values: ArrayLike) -> "UnimodularArray":
        """Build from complex entries; each must have modulus 1."""
        values = np.asarray(values, dtype=np.complex128)
        if values.ndim != 2 or values.size == 0:
            raise InvalidInputError("Array values must be a nonempty 2D array")
        if np.any(np.abs(np.abs(values) - 1.0) > 1e-12):
            raise InvalidInputError("Array entries must have unit modulus")
        return cls(np.angle(values))

    @property
    def values(self) -> NDArray[np.complex128]:
        return materialize(self.phases)

    @property
    def dims(self) -> tuple[int, int]:
        n1, n2 = self.phases.shape
        return int(n1), int(n2)

    @property
    def alphabet(self) -> Alphabet:
        return infer_alphabet(self.phases)

    @property
    def T(self) -> "UnimodularArray":  # noqa: N802
        return UnimodularArray(self.phases.T)

    def with_phase_offset(self, n1: int, n2: int, delta: float) -> "UnimodularArray":
        """Copy with the phase at (n1, n2) rotated by delta radians."""
        phases = self.phases.copy()
        phases[n1, n2] += delta
        return UnimodularArray(phases)

    def rotated(self, alpha: float) -> "UnimodularArray":
        """Copy with every phase rotated by alpha radians."""
        return UnimodularArray(self.phases + alpha)

    def __repr__(self) -> str:
        n1, n2 = self.dims
        return f"UnimodularArray(dims={n1}x{n2}, alphabet={self.alphabet.value})"


class ArrayPair(NamedTuple):
    """Two equal-shape arrays treated as a candidate complementary array pair."""

    u: UnimodularArray
    w: UnimodularArray

    @property
    def dims(self) -> tuple[int, int]:
        return self.u.dims


@dataclass(frozen=True, eq=False)
class CorrelationSurface:
    """Two-dimensional aperiodic autocorrelation indexed by (tau1, tau2)."""

    values: NDArray[np.complex128] = field(repr=False)

    def __post_init__(self) -> None:
        """Validate entity invariants."""
        arr = np.array(self.values, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] % 2 == 0 or arr.shape[1] % 2 == 0:
            raise InvalidInputError("Correlation surface must have odd dims (2N1-1, 2N2-1)")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def max_lags(self) -> tuple[int, int]:
        r1, r2 = self.values.shape
        return (r1 - 1) // 2, (r2 - 1) // 2

    def __getitem__(self, lag: tuple[int, int]) -> complex:
        tau1, tau2 = lag
        m1, m2 = self.max_lags
        if abs(tau1) > m1 or abs(tau2) > m2:
            return 0j
        return complex(self.values[tau1 + m1, tau2 + m2])

    def __add__(self, other: "CorrelationSurface") -> "CorrelationSurface":
        if other.values.shape != self.values.shape:
            raise InvalidInputError("Correlation surfaces must share the lag range")
        return CorrelationSurface(self.values + other.values)
