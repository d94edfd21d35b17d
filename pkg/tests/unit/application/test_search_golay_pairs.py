"""Unit tests for SearchGolayPairsUseCase."""
from pathlib import Path
from unittest.mock import Mock

import pytest

from src.application.use_cases.search_golay_pairs import SearchGolayPairsUseCase
from src.domain.exceptions import ResourceLimitError
from src.domain.interfaces.pair_repository import IPairRepository


@pytest.fixture
def mock_pair_repository():
    return Mock(spec=IPairRepository)


@pytest.mark.unit
class TestSearchGolayPairsUseCase:
    """Tests for SearchGolayPairsUseCase."""

    def test_listing_is_returned_and_saved(self, mock_pair_repository):
        # Arrange
        use_case = SearchGolayPairsUseCase(mock_pair_repository)
        out = Path("pairs.json")

        # Act
        pairs = use_case.execute(2, 2, out_path=out)

        # Assert
        assert len(pairs) == 8
        mock_pair_repository.save_search_results.assert_called_once_with(2, 2, pairs, out)

    def test_empty_listing_is_still_saved(self, mock_pair_repository):
        use_case = SearchGolayPairsUseCase(mock_pair_repository)

        pairs = use_case.execute(3, 2, out_path=Path("none.json"))

        assert pairs == []
        mock_pair_repository.save_search_results.assert_called_once()

    def test_default_budget_applies(self, mock_pair_repository):
        use_case = SearchGolayPairsUseCase(mock_pair_repository, budget=16)

        with pytest.raises(ResourceLimitError, match="budget 16"):
            use_case.execute(3, 2)

    def test_call_budget_overrides_default(self, mock_pair_repository):
        use_case = SearchGolayPairsUseCase(mock_pair_repository, budget=16)

        pairs = use_case.execute(3, 2, budget=64)

        assert pairs == []
        mock_pair_repository.save_search_results.assert_not_called()
