"""Use case for the exhaustive Golay pair search."""
from pathlib import Path
from typing import Optional

from src.domain.entities.sequence import SequencePair
from src.domain.interfaces.pair_repository import IPairRepository
from src.domain.services.golay_core import DEFAULT_SEARCH_BUDGET, search_golay_pairs


class SearchGolayPairsUseCase:
    """Use case for listing every Golay pair of a length and alphabet."""

    def __init__(
        self, pair_repository: IPairRepository, budget: int = DEFAULT_SEARCH_BUDGET
    ) -> None:
        """
        Initialize use case with dependencies.

        Args:
            pair_repository: Where listings are written
            budget: Default cap on alphabet_size**(2*length)
        """
        self._pair_repository = pair_repository
        self._budget = budget

    def execute(
        self,
        length: int,
        alphabet_size: int,
        out_path: Optional[Path] = None,
        budget: Optional[int] = None,
    ) -> list[SequencePair]:
        """
        Run the search and optionally persist the listing.

        Raises:
            InvalidInputError: On a bad length or alphabet size
            ResourceLimitError: If the search space exceeds the budget
        """
        pairs = search_golay_pairs(length, alphabet_size, budget or self._budget)
        if out_path is not None:
            self._pair_repository.save_search_results(length, alphabet_size, pairs, Path(out_path))
        return pairs
