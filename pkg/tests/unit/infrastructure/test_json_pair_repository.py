"""Unit tests for JsonPairRepository."""
import json

import numpy as np
import pytest
from pydantic import ValidationError

from src.domain.entities.sequence import Alphabet
from src.domain.exceptions import InvalidInputError
from src.domain.services.golay_array import is_golay_array_pair
from src.domain.services.golay_core import search_golay_pairs
from src.infrastructure.repositories.json_pair_repository import JsonPairRepository
from src.infrastructure.repositories.schemas import SequenceFile, SequencePairFile


@pytest.fixture
def repository():
    return JsonPairRepository()


@pytest.mark.unit
class TestArrayPairFiles:
    """Tests for array pair persistence."""

    def test_saved_file_layout(self, repository, published_pair, tmp_path):
        # Arrange
        path = tmp_path / "nested" / "pair.json"

        # Act
        repository.save_array_pair(published_pair, path)

        # Assert
        payload = json.loads(path.read_text())
        assert payload["dims"] == [16, 8]
        assert len(payload["U_phases"]) == 16
        assert len(payload["W_phases"][0]) == 8

    def test_load_returns_same_pair(self, repository, published_pair, tmp_path):
        path = tmp_path / "pair.json"
        repository.save_array_pair(published_pair, path)

        loaded = repository.load_array_pair(path)

        np.testing.assert_array_equal(loaded.u.phases, published_pair.u.phases)
        np.testing.assert_array_equal(loaded.w.phases, published_pair.w.phases)
        assert is_golay_array_pair(*loaded, tol=1e-12)

    def test_dims_mismatch_rejected(self, repository, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps({"dims": [2, 2], "U_phases": [[0, 0]], "W_phases": [[0, 0], [0, 0]]})
        )

        with pytest.raises(InvalidInputError, match="does not match dims"):
            repository.load_array_pair(path)

    def test_malformed_json_rejected(self, repository, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")

        with pytest.raises(InvalidInputError, match="Malformed"):
            repository.load_array_pair(path)

    def test_missing_file_rejected(self, repository, tmp_path):
        with pytest.raises(InvalidInputError, match="Cannot read"):
            repository.load_array_pair(tmp_path / "missing.json")


@pytest.mark.unit
class TestSequenceFiles:
    """Tests for sequence schemas and search listing persistence."""

    def test_declared_alphabet_must_cover_phases(self):
        with pytest.raises(ValidationError, match="phases are quaternary, declared binary"):
            SequenceFile(alphabet="binary", phases=[0.0, np.pi / 2])

    def test_wider_declared_alphabet_accepted(self):
        schema = SequenceFile(alphabet="polyphase", phases=[0.0, np.pi])

        assert schema.alphabet is Alphabet.POLYPHASE

    def test_off_grid_phase_is_polyphase(self):
        with pytest.raises(ValidationError, match="phases are polyphase"):
            SequenceFile(alphabet="quaternary", phases=[0.0, 0.3])

    def test_sequence_lengths_must_agree(self):
        with pytest.raises(ValidationError, match="sequence lengths differ"):
            SequencePairFile.model_validate(
                {
                    "u": {"alphabet": "binary", "phases": [0, 0]},
                    "w": {"alphabet": "binary", "phases": [0]},
                }
            )

    def test_quaternary_listing_records_alphabets(self, repository, tmp_path):
        path = tmp_path / "search.json"

        repository.save_search_results(1, 4, search_golay_pairs(1, 4), path)

        alphabets = {p["u"]["alphabet"] for p in json.loads(path.read_text())["pairs"]}
        assert alphabets == {"binary", "quaternary"}

    def test_search_listing(self, repository, tmp_path):
        pairs = search_golay_pairs(2, 2)
        path = tmp_path / "search.json"

        repository.save_search_results(2, 2, pairs, path)

        payload = json.loads(path.read_text())
        assert payload["length"] == 2
        assert payload["count"] == len(pairs)
        assert {"alphabet": "binary", "phases": [0.0, 0.0]} in [p["u"] for p in payload["pairs"]]

    def test_empty_listing(self, repository, tmp_path):
        path = tmp_path / "search.json"

        repository.save_search_results(3, 2, [], path)

        assert json.loads(path.read_text())["pairs"] == []
