"""Unit tests for array entities."""
import numpy as np
import pytest

from src.domain.entities.array import ArrayPair, CorrelationSurface, UnimodularArray
from src.domain.entities.sequence import Alphabet
from src.domain.exceptions import InvalidInputError


@pytest.mark.unit
class TestUnimodularArray:
    """Tests for UnimodularArray entity."""

    def test_dims_and_values(self):
        arr = UnimodularArray([[0.0, np.pi, 0.0], [np.pi / 2, 0.0, 0.0]])

        assert arr.dims == (2, 3)
        assert arr.values[1, 0] == 1j
        assert arr.alphabet is Alphabet.QUATERNARY

    def test_one_dimensional_phases_rejected(self):
        with pytest.raises(InvalidInputError, match="2-dimensional"):
            UnimodularArray([0.0, 0.0])

    def test_transpose(self):
        arr = UnimodularArray([[0.0, np.pi, 0.0]])

        assert arr.T.dims == (3, 1)
        assert arr.T.values[:, 0].tolist() == [1 + 0j, -1 + 0j, 1 + 0j]

    def test_with_phase_offset_changes_one_entry(self):
        arr = UnimodularArray(np.zeros((2, 2)))

        shifted = arr.with_phase_offset(1, 0, np.pi / 7)

        assert shifted.phases[1, 0] == pytest.approx(np.pi / 7)
        assert np.count_nonzero(shifted.phases) == 1
        assert np.count_nonzero(arr.phases) == 0

    def test_rotated(self):
        arr = UnimodularArray(np.zeros((1, 2)))

        assert arr.rotated(np.pi).values.tolist() == [[-1 + 0j, -1 + 0j]]

    def test_from_values_rejects_non_unit_modulus(self):
        with pytest.raises(InvalidInputError, match="unit modulus"):
            UnimodularArray.from_values([[1.0, 2.0]])

    def test_pair_dims(self):
        arr = UnimodularArray(np.zeros((4, 2)))

        assert ArrayPair(arr, arr).dims == (4, 2)


@pytest.mark.unit
class TestCorrelationSurface:
    def test_indexing_by_lag_pair(self):
        values = np.arange(15).reshape(3, 5)
        surface = CorrelationSurface(values)

        assert surface.max_lags == (1, 2)
        assert surface[0, 0] == 7
        assert surface[-1, -2] == 0
        assert surface[1, 2] == 14
        assert surface[2, 0] == 0

    def test_even_dims_rejected(self):
        with pytest.raises(InvalidInputError, match="odd dims"):
            CorrelationSurface(np.zeros((2, 3)))
