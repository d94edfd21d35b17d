"""Use case for building a complementary array pair from cataloged seeds."""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from src.domain.entities.array import ArrayPair
from src.domain.entities.sequence import Alphabet, ComplementarityReport
from src.domain.exceptions import VerificationError
from src.domain.interfaces.pair_repository import IPairRepository
from src.domain.services.golay_array import Layout, construct, is_golay_array_pair
from src.domain.services.golay_core import CATALOG_TOLERANCE, known_golay_pair
from src.infrastructure.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ConstructionResult:
    """A constructed pair together with its certification."""

    pair: ArrayPair
    report: ComplementarityReport
    layout: Layout
    path: Optional[Path] = None


class ConstructArrayPairUseCase:
    """Use case for constructing and certifying an array pair."""

    def __init__(self, pair_repository: IPairRepository) -> None:
        """
        Initialize use case with dependencies.

        Args:
            pair_repository: Where the constructed pair is written
        """
        self._pair_repository = pair_repository

    def execute(
        self,
        l1: int,
        l2: int,
        alphabet: Alphabet | str = Alphabet.BINARY,
        layout: Layout | str = Layout.STACKED,
        alphabet2: Optional[Alphabet | str] = None,
        out_path: Optional[Path] = None,
    ) -> ConstructionResult:
        """
        Construct the pair from seeds of lengths l1 and l2.

        Args:
            l1: Length of the first seed pair
            l2: Length of the second seed pair
            alphabet: Alphabet of the first seed (and of the second unless alphabet2 is set)
            layout: stacked gives (2*l1) x l2, concat gives l1 x (2*l2)
            alphabet2: Alphabet of the second seed
            out_path: Optional destination of the array pair file

        Returns:
            ConstructionResult with the pair and its complementarity report

        Raises:
            UnsupportedLengthError: If a seed length is not cataloged
            VerificationError: If the constructed pair fails certification
        """
        layout = Layout(layout)
        first = Alphabet(alphabet)
        second = Alphabet(alphabet2) if alphabet2 is not None else first

        u1, w1 = known_golay_pair(l1, first)
        u2, w2 = known_golay_pair(l2, second)
        pair = construct(layout, u1, w1, u2, w2)
        report = is_golay_array_pair(pair.u, pair.w, CATALOG_TOLERANCE)

        logger.info(
            "Array pair constructed",
            extra={
                "l1": l1,
                "l2": l2,
                "alphabets": [first.value, second.value],
                "layout": layout.value,
                "dims": list(pair.dims),
                "max_deviation": report.max_deviation,
            },
        )
        if not report:
            raise VerificationError(
                f"Constructed pair failed certification (max deviation {report.max_deviation:.3e})"
            )

        if out_path is not None:
            self._pair_repository.save_array_pair(pair, Path(out_path))
        return ConstructionResult(pair=pair, report=report, layout=layout, path=out_path)
