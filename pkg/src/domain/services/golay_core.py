"""One-dimensional Golay complementary sequence machinery.

Autocorrelation, power spectral density, complementarity testing, a catalog of
seed pairs and an exhaustive-search oracle. Correlations follow the convention
R[tau] = sum_n x[n] * conj(x[n + tau]) with 0-based indices.
"""
import itertools
from collections import defaultdict
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.domain.entities.sequence import (
    Alphabet,
    ComplementarityReport,
    CorrelationFunction,
    SequencePair,
    UnimodularSequence,
)
from src.domain.exceptions import InvalidInputError, ResourceLimitError, UnsupportedLengthError
from src.infrastructure.logging import get_logger

logger = get_logger(__name__)

DEFAULT_TOLERANCE = 1e-9
CATALOG_TOLERANCE = 1e-12
DEFAULT_SEARCH_BUDGET = 2**20

_PI = np.pi
_HALF_PI = np.pi / 2

# Seed pairs of the published broad-beam experiment, resolved to length 8.
PUBLISHED_BINARY_SEED = (
    (0.0, 0.0, 0.0, 0.0, 0.0, _PI, _PI, 0.0),
    (0.0, 0.0, _PI, _PI, 0.0, _PI, 0.0, _PI),
)
PUBLISHED_QUATERNARY_SEED = (
    (0.0, 0.0, 0.0, 0.0, _HALF_PI, -_HALF_PI, -_HALF_PI, _HALF_PI),
    (0.0, 0.0, _PI, _PI, _HALF_PI, -_HALF_PI, _HALF_PI, -_HALF_PI),
)


_KernelPair = tuple[tuple[float, ...], tuple[float, ...]]


def _signs(signs: str) -> tuple[float, ...]:
    return tuple(0.0 if s == "+" else _PI for s in signs)


_BINARY_KERNELS: dict[int, _KernelPair] = {
    1: ((0.0,), (0.0,)),
    8: PUBLISHED_BINARY_SEED,
    10: (_signs("++-+-+--++"), _signs("++-+++++--")),
    26: (
        _signs("++++-++--+-+-+--+-+++--+++"),
        _signs("++++-++--+-+++++-+---++---"),
    ),
}

_QUATERNARY_KERNELS: dict[int, _KernelPair] = {
    3: ((0.0, 0.0, _PI), (0.0, _HALF_PI, 0.0)),
    8: PUBLISHED_QUATERNARY_SEED,
}


class PairTransform(str, Enum):
    """Operations that map a Golay pair onto another Golay pair."""

    REVERSE_BOTH = "reverse-both"
    CONJUGATE_BOTH = "conjugate-both"
    GLOBAL_PHASE = "global-phase"
    NEGATE_ONE = "per-sequence-negation"


def _wrap(phases: ArrayLike) -> NDArray[np.float64]:
    return np.mod(np.asarray(phases, dtype=np.float64), 2 * _PI)


def acf(u: UnimodularSequence) -> CorrelationFunction:
    """
    Aperiodic autocorrelation of a sequence.

    Args:
        u: Sequence of length N

    Returns:
        CorrelationFunction over lags -(N-1)..N-1
    """
    if not isinstance(u, UnimodularSequence):
        raise InvalidInputError("acf expects a UnimodularSequence")
    x = u.values
    n = x.size
    r = np.zeros(2 * n - 1, dtype=np.complex128)
    for tau in range(n):
        # tau >= 0: sum_{n=0}^{N-1-tau} x[n] conj(x[n+tau])
        r[n - 1 + tau] = np.sum(x[: n - tau] * np.conj(x[tau:]))
    for tau in range(-n + 1, 0):
        # tau < 0: sum_{n=0}^{N-1+tau} x[n-tau] conj(x[n])
        r[n - 1 + tau] = np.sum(x[-tau:] * np.conj(x[: n + tau]))
    return CorrelationFunction(r)


def complementarity_report(
    total: NDArray[np.complex128], peak_index: tuple[int, int] | int, peak: float, tol: float
) -> ComplementarityReport:
    """Summarize how far a summed correlation is from peak * delta."""
    off_peak = np.abs(total)
    peak_deviation = float(abs(total[peak_index] - peak))
    off_peak[peak_index] = 0.0
    max_off_peak = float(off_peak.max()) if off_peak.size else 0.0
    return ComplementarityReport(
        is_complementary=max_off_peak <= tol and peak_deviation <= tol,
        max_off_peak=max_off_peak,
        peak_deviation=peak_deviation,
        tolerance=tol,
    )


def is_golay_pair(
    u: UnimodularSequence, w: UnimodularSequence, tol: float = DEFAULT_TOLERANCE
) -> ComplementarityReport:
    """
    Test whether R_u + R_w equals 2N at lag 0 and vanishes elsewhere.

    Raises:
        InvalidInputError: If lengths differ or tol is negative
    """
    if len(u) != len(w):
        raise InvalidInputError(f"Sequence lengths differ: {len(u)} != {len(w)}")
    if tol < 0:
        raise InvalidInputError("Tolerance must be nonnegative")
    n = len(u)
    total = (acf(u) + acf(w)).values
    return complementarity_report(total, n - 1, 2.0 * n, tol)


def power_spectrum(u: UnimodularSequence, freqs: ArrayLike) -> NDArray[np.float64]:
    """|sum_n u[n] e^{-j 2 pi f n}|^2 at each normalized frequency f (cycles/sample)."""
    f = np.atleast_1d(np.asarray(freqs, dtype=np.float64))
    n = np.arange(len(u))
    spectrum = np.exp(-2j * _PI * np.outer(f, n)) @ u.values
    return np.abs(spectrum) ** 2


def psd(u: UnimodularSequence, f: float) -> float:
    """Power spectral density of u at normalized frequency f."""
    return float(power_spectrum(u, f)[0])


def psd_from_acf(u: UnimodularSequence, f: float) -> float:
    """
    PSD evaluated as the Fourier transform of the ACF.

    With R[tau] = sum x[n] conj(x[n+tau]) the transform pairing with
    ``psd`` carries e^{+j 2 pi f tau}; for real sequences the sign is immaterial.
    """
    r = acf(u)
    value = np.sum(r.values * np.exp(2j * _PI * f * r.lags))
    if abs(value.imag) > 1e-10 * max(1.0, abs(value.real)):
        raise ArithmeticError(f"ACF transform is not real at f={f}: {value}")
    return float(value.real)


def complementary_psd_sum(
    u: UnimodularSequence, w: UnimodularSequence, freqs: ArrayLike
) -> NDArray[np.float64]:
    """S_u(f) + S_w(f); constant 2N for a Golay pair."""
    if len(u) != len(w):
        raise InvalidInputError(f"Sequence lengths differ: {len(u)} != {len(w)}")
    return power_spectrum(u, freqs) + power_spectrum(w, freqs)


def expand_pair(u: UnimodularSequence, w: UnimodularSequence) -> SequencePair:
    """Double a Golay pair by concatenation: (u|w, u|-w)."""
    if len(u) != len(w):
        raise InvalidInputError(f"Sequence lengths differ: {len(u)} != {len(w)}")
    return SequencePair(
        UnimodularSequence(np.concatenate([u.phases, w.phases])),
        UnimodularSequence(_wrap(np.concatenate([u.phases, w.phases + _PI]))),
    )


def _derive(length: int, kernels: dict[int, _KernelPair]) -> SequencePair | None:
    if length in kernels:
        u, w = kernels[length]
        return SequencePair(UnimodularSequence(u), UnimodularSequence(w))
    if length % 2 == 0 and length > 1:
        half = _derive(length // 2, kernels)
        if half is not None:
            return expand_pair(*half)
    return None


def known_golay_pair(length: int, alphabet: Alphabet | str = Alphabet.BINARY) -> SequencePair:
    """
    Look up a Golay pair of the given length from the seed catalog.

    Binary kernels are lengths 1, 8, 10 and 26; quaternary kernels 3 and 8.
    Every length reachable by repeated doubling of a kernel is available, and a
    quaternary request falls back to the binary catalog.

    Raises:
        UnsupportedLengthError: If no cataloged pair has this length
    """
    alphabet = Alphabet(alphabet)
    if not isinstance(length, int) or length < 1:
        raise InvalidInputError("Length must be a positive integer")
    if alphabet is Alphabet.POLYPHASE:
        raise UnsupportedLengthError("The catalog holds binary and quaternary pairs only")

    pair = None
    if alphabet is Alphabet.QUATERNARY:
        pair = _derive(length, _QUATERNARY_KERNELS)
    if pair is None:
        pair = _derive(length, _BINARY_KERNELS)
    if pair is None:
        raise UnsupportedLengthError(
            f"No cataloged {alphabet.value} Golay pair of length {length}; "
            f"available: {catalog_lengths(alphabet, max(64, length))}"
        )
    return pair


def catalog_lengths(alphabet: Alphabet | str, max_length: int = 64) -> list[int]:
    """All cataloged lengths up to max_length."""
    alphabet = Alphabet(alphabet)
    kernels = dict(_BINARY_KERNELS)
    if alphabet is Alphabet.QUATERNARY:
        kernels.update(_QUATERNARY_KERNELS)
    elif alphabet is Alphabet.POLYPHASE:
        return []
    return [n for n in range(1, max_length + 1) if _derive(n, kernels) is not None]


def search_golay_pairs(
    length: int, alphabet_size: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> list[SequencePair]:
    """
    Enumerate every Golay pair over the {2, 4}-point alphabet.

    Pairs are listed in lexicographic order of their phase indices (u first, then w).
    Instead of testing all alphabet_size**(2*length) pairs, sequences are grouped by
    their off-peak ACF and each u is matched against the group holding -R_u.

    Raises:
        InvalidInputError: On a bad length or alphabet size
        ResourceLimitError: If alphabet_size**(2*length) exceeds the budget
    """
    Alphabet.from_size(alphabet_size)
    if not isinstance(length, int) or length < 1:
        raise InvalidInputError("Length must be a positive integer")
    space = alphabet_size ** (2 * length)
    if space > budget:
        raise ResourceLimitError(
            f"Search space {alphabet_size}^{2 * length} = {space} exceeds budget {budget}; "
            f"reduce the length or raise the budget"
        )

    logger.info(
        "Starting exhaustive Golay search",
        extra={"length": length, "alphabet_size": alphabet_size, "search_space": space},
    )

    indices = np.array(list(itertools.product(range(alphabet_size), repeat=length)))
    values = UnimodularSequence.from_indices(indices.ravel(), alphabet_size).values.reshape(
        indices.shape
    )
    # Off-peak ACFs are Gaussian integers for these alphabets, so integer keys are exact.
    lags = [
        np.sum(values[:, : length - tau] * np.conj(values[:, tau:]), axis=1)
        for tau in range(1, length)
    ]
    acf_table = (
        np.stack(lags, axis=1) if lags else np.zeros((len(indices), 0), dtype=np.complex128)
    )
    keys = [
        tuple(int(v) for v in np.rint(np.concatenate([row.real, row.imag])))
        for row in acf_table
    ]

    groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for row, key in enumerate(keys):
        groups[key].append(row)

    pairs: list[SequencePair] = []
    for row, key in enumerate(keys):
        target = tuple(-k for k in key)
        for match in groups.get(target, []):
            pairs.append(
                SequencePair(
                    UnimodularSequence.from_indices(indices[row], alphabet_size),
                    UnimodularSequence.from_indices(indices[match], alphabet_size),
                )
            )

    logger.info(
        "Exhaustive Golay search finished",
        extra={"length": length, "alphabet_size": alphabet_size, "pairs_found": len(pairs)},
    )
    return pairs


def transform_pair(
    u: UnimodularSequence,
    w: UnimodularSequence,
    kind: PairTransform | str,
    *,
    alpha: float = 0.0,
    negate: str = "u",
) -> SequencePair:
    """
    Apply a complementarity-preserving transform to a Golay pair.

    Args:
        u, w: A Golay pair
        kind: Transform to apply
        alpha: Rotation angle for the global-phase transform
        negate: Which sequence ("u" or "w") the per-sequence negation flips
    """
    kind = PairTransform(kind)
    if len(u) != len(w):
        raise InvalidInputError(f"Sequence lengths differ: {len(u)} != {len(w)}")

    if kind is PairTransform.REVERSE_BOTH:
        pu, pw = u.phases[::-1], w.phases[::-1]
    elif kind is PairTransform.CONJUGATE_BOTH:
        pu, pw = -u.phases, -w.phases
    elif kind is PairTransform.GLOBAL_PHASE:
        pu, pw = u.phases + alpha, w.phases + alpha
    else:
        if negate not in ("u", "w"):
            raise InvalidInputError("negate must be 'u' or 'w'")
        pu = u.phases + _PI if negate == "u" else u.phases
        pw = w.phases + _PI if negate == "w" else w.phases
    return SequencePair(UnimodularSequence(_wrap(pu)), UnimodularSequence(_wrap(pw)))
