"""Scenario repository interface - defines contract for scenario files."""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional

from src.domain.entities.scenario import Scenario


class IScenarioRepository(ABC):
    """Interface for loading deployment scenarios."""

    @abstractmethod
    def load(self, path: Optional[Path] = None) -> Scenario:
        """
        Load a scenario.

        Args:
            path: Scenario JSON file; None returns the default published scenario

        Returns:
            Scenario entity with its configuration pair resolved

        Raises:
            InvalidInputError: If the file is unreadable or malformed
            UnsupportedLengthError: If the scenario names an uncataloged seed length
        """
        pass
