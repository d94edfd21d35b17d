"""Pair repository interface - defines contract for array pair files and search listings."""
from abc import ABC, abstractmethod
from pathlib import Path

from src.domain.entities.array import ArrayPair
from src.domain.entities.sequence import SequencePair


class IPairRepository(ABC):
    """Interface for persisting array pairs and Golay search listings."""

    @abstractmethod
    def load_array_pair(self, path: Path) -> ArrayPair:
        """
        Read an array pair file.

        Args:
            path: JSON file with dims and row-major U/W phases

        Returns:
            ArrayPair with the file's phases

        Raises:
            InvalidInputError: If the file is unreadable, malformed or the dims disagree
        """
        pass

    @abstractmethod
    def save_array_pair(self, pair: ArrayPair, path: Path) -> None:
        """
        Write an array pair file.

        Args:
            pair: Array pair to persist
            path: Destination JSON file
        """
        pass

    @abstractmethod
    def save_search_results(
        self, length: int, alphabet_size: int, pairs: list[SequencePair], path: Path
    ) -> None:
        """
        Write the listing produced by an exhaustive search.

        Args:
            length: Sequence length searched
            alphabet_size: 2 or 4
            pairs: Pairs in the order they were found
            path: Destination JSON file
        """
        pass
