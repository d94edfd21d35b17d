"""Use case for certifying an array pair file."""
from dataclasses import dataclass
from pathlib import Path

from src.domain.entities.sequence import ComplementarityReport
from src.domain.interfaces.pair_repository import IPairRepository
from src.domain.services.golay_array import is_golay_array_pair
from src.domain.services.golay_core import DEFAULT_TOLERANCE
from src.infrastructure.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class VerificationResult:
    dims: tuple[int, int]
    report: ComplementarityReport


class VerifyArrayPairUseCase:
    """Use case for checking R_U + R_W against the delta condition."""

    def __init__(self, pair_repository: IPairRepository) -> None:
        self._pair_repository = pair_repository

    def execute(self, path: Path, tol: float = DEFAULT_TOLERANCE) -> VerificationResult:
        """
        Load a pair file and test it at tolerance tol.

        The result carries the verdict; deciding what a failure means is left
        to the caller.

        Raises:
            InvalidInputError: If the file is malformed or tol is negative
        """
        pair = self._pair_repository.load_array_pair(Path(path))
        report = is_golay_array_pair(pair.u, pair.w, tol)
        logger.info(
            "Array pair verified",
            extra={
                "path": str(path),
                "dims": list(pair.dims),
                "passed": report.is_complementary,
                "max_deviation": report.max_deviation,
            },
        )
        return VerificationResult(dims=pair.dims, report=report)
