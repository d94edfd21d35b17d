"""Two-dimensional Golay complementary array machinery.

2D autocorrelation, array complementarity testing and the two constructions of
a complementary array pair from two Golay sequence pairs (row stacking and
column concatenation).
"""
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from src.domain.entities.array import ArrayPair, CorrelationSurface, UnimodularArray
from src.domain.entities.sequence import ComplementarityReport, UnimodularSequence
from src.domain.exceptions import InvalidInputError
from src.domain.services.golay_core import (
    CATALOG_TOLERANCE,
    DEFAULT_TOLERANCE,
    complementarity_report,
    is_golay_pair,
)

_TWO_PI = 2 * np.pi


class Layout(str, Enum):
    """Block arrangement of a constructed array pair."""

    STACKED = "stacked"  # (2*L1) x L2
    CONCAT = "concat"  # L1 x (2*L2)


def acf2d(u: UnimodularArray) -> CorrelationSurface:
    """
    Aperiodic 2D autocorrelation R[t1, t2] = sum U[n1, n2] conj(U[n1 + t1, n2 + t2]).

    The four lag quadrants are evaluated with their own index ranges; the zero
    branch (lags beyond the array) is implicit in CorrelationSurface.
    """
    if not isinstance(u, UnimodularArray):
        raise InvalidInputError("acf2d expects a UnimodularArray")
    x = u.values
    n1, n2 = x.shape
    r = np.zeros((2 * n1 - 1, 2 * n2 - 1), dtype=np.complex128)
    for t1 in range(-n1 + 1, n1):
        for t2 in range(-n2 + 1, n2):
            if t1 >= 0 and t2 >= 0:
                a = x[: n1 - t1, : n2 - t2]
                b = x[t1:, t2:]
            elif t1 < 0 and t2 >= 0:
                a = x[-t1:, : n2 - t2]
                b = x[: n1 + t1, t2:]
            elif t1 >= 0 and t2 < 0:
                a = x[: n1 - t1, -t2:]
                b = x[t1:, : n2 + t2]
            else:
                a = x[-t1:, -t2:]
                b = x[: n1 + t1, : n2 + t2]
            r[t1 + n1 - 1, t2 + n2 - 1] = np.sum(a * np.conj(b))
    return CorrelationSurface(r)


def is_golay_array_pair(
    u: UnimodularArray, w: UnimodularArray, tol: float = DEFAULT_TOLERANCE
) -> ComplementarityReport:
    """
    Test whether R_U + R_W = 2*N1*N2*delta[t1, t2] within tol at every lag.

    Raises:
        InvalidInputError: If the dims differ or tol is negative
    """
    if u.dims != w.dims:
        raise InvalidInputError(f"Array dims differ: {u.dims} != {w.dims}")
    if tol < 0:
        raise InvalidInputError("Tolerance must be nonnegative")
    n1, n2 = u.dims
    total = (acf2d(u) + acf2d(w)).values
    return complementarity_report(total, (n1 - 1, n2 - 1), 2.0 * n1 * n2, tol)


def transpose_pair(u: UnimodularArray, w: UnimodularArray) -> ArrayPair:
    return ArrayPair(u.T, w.T)


def _flipped_conjugate(x: UnimodularSequence) -> NDArray[np.float64]:
    # x^H E_L as phases: conjugate, then reverse
    return -x.phases[::-1]


def _validate_seeds(
    u1: UnimodularSequence, w1: UnimodularSequence, u2: UnimodularSequence, w2: UnimodularSequence
) -> None:
    for label, (a, b) in (("first", (u1, w1)), ("second", (u2, w2))):
        report = is_golay_pair(a, b, CATALOG_TOLERANCE)
        if not report:
            raise InvalidInputError(
                f"The {label} seed is not a Golay pair "
                f"(max deviation {report.max_deviation:.3e})"
            )


def _blocks(
    u1: UnimodularSequence, w1: UnimodularSequence, u2: UnimodularSequence, w2: UnimodularSequence
) -> tuple[NDArray[np.float64], ...]:
    # Outer products become phase sums; the minus sign is a pi rotation.
    u_top = u1.phases[:, None] + u2.phases[None, :]
    u_bottom = w1.phases[:, None] + _flipped_conjugate(w2)[None, :] + np.pi
    w_top = u1.phases[:, None] + w2.phases[None, :]
    w_bottom = w1.phases[:, None] + _flipped_conjugate(u2)[None, :]
    return u_top, u_bottom, w_top, w_bottom


def construct_stacked(
    u1: UnimodularSequence, w1: UnimodularSequence, u2: UnimodularSequence, w2: UnimodularSequence
) -> ArrayPair:
    """
    Build a (2*L1) x L2 complementary array pair by row stacking.

        U = [ u1 u2^T ; -w1 w2^H E ],   W = [ u1 w2^T ; w1 u2^H E ]

    where E reverses the column order.

    Raises:
        InvalidInputError: If either seed is not a Golay pair
    """
    _validate_seeds(u1, w1, u2, w2)
    u_top, u_bottom, w_top, w_bottom = _blocks(u1, w1, u2, w2)
    return ArrayPair(
        UnimodularArray(np.mod(np.vstack([u_top, u_bottom]), _TWO_PI)),
        UnimodularArray(np.mod(np.vstack([w_top, w_bottom]), _TWO_PI)),
    )


def construct_concat(
    u1: UnimodularSequence, w1: UnimodularSequence, u2: UnimodularSequence, w2: UnimodularSequence
) -> ArrayPair:
    """
    Build an L1 x (2*L2) complementary array pair by side-by-side concatenation.

        U = [ u1 u2^T, -w1 w2^H E ],   W = [ u1 w2^T, w1 u2^H E ]

    Raises:
        InvalidInputError: If either seed is not a Golay pair
    """
    _validate_seeds(u1, w1, u2, w2)
    u_top, u_bottom, w_top, w_bottom = _blocks(u1, w1, u2, w2)
    return ArrayPair(
        UnimodularArray(np.mod(np.hstack([u_top, u_bottom]), _TWO_PI)),
        UnimodularArray(np.mod(np.hstack([w_top, w_bottom]), _TWO_PI)),
    )


def construct(
    layout: Layout | str,
    u1: UnimodularSequence,
    w1: UnimodularSequence,
    u2: UnimodularSequence,
    w2: UnimodularSequence,
) -> ArrayPair:
    """Dispatch to the stacked or concatenated construction."""
    if Layout(layout) is Layout.STACKED:
        return construct_stacked(u1, w1, u2, w2)
    return construct_concat(u1, w1, u2, w2)


def _dtft2(x: NDArray[np.complex128], f1: float, f2: float) -> complex:
    n1, n2 = x.shape
    e1 = np.exp(-1j * _TWO_PI * f1 * np.arange(n1))
    e2 = np.exp(-1j * _TWO_PI * f2 * np.arange(n2))
    return complex(e1 @ x @ e2)


def psd2d(u: UnimodularArray, f1: float, f2: float) -> float:
    """|sum U[n1, n2] e^{-j 2 pi (f1 n1 + f2 n2)}|^2."""
    return abs(_dtft2(u.values, f1, f2)) ** 2


def psd2d_from_acf(u: UnimodularArray, f1: float, f2: float) -> float:
    """PSD of U as the 2D Fourier transform of its ACF (pairs with psd2d via e^{+j...})."""
    r = acf2d(u)
    m1, m2 = r.max_lags
    t1 = np.arange(-m1, m1 + 1)
    t2 = np.arange(-m2, m2 + 1)
    kernel = np.exp(1j * _TWO_PI * (f1 * t1[:, None] + f2 * t2[None, :]))
    return float(np.sum(r.values * kernel).real)
