"""JSON pair repository implementation."""
import json
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel, ValidationError

from src.domain.entities.array import ArrayPair, UnimodularArray
from src.domain.entities.sequence import SequencePair, UnimodularSequence
from src.domain.exceptions import InvalidInputError
from src.domain.interfaces.pair_repository import IPairRepository
from src.infrastructure.logging import get_logger
from src.infrastructure.repositories.schemas import (
    ArrayPairFile,
    SearchResultFile,
    SequenceFile,
    SequencePairFile,
)

logger = get_logger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)


def read_model(path: Path, model: type[ModelT]) -> ModelT:
    """Parse a JSON file into a schema, mapping every failure to InvalidInputError."""
    try:
        text = Path(path).read_text(encoding="utf-8")
        return model.model_validate_json(text)
    except OSError as e:
        logger.error("Cannot read file", extra={"path": str(path), "error": str(e)})
        raise InvalidInputError(f"Cannot read {path}: {e}") from e
    except ValidationError as e:
        logger.error("Malformed file", extra={"path": str(path), "error": str(e)})
        raise InvalidInputError(f"Malformed {model.__name__} in {path}: {e}") from e


def write_model(path: Path, model: BaseModel) -> None:
    """Write a schema as indented JSON, creating parent directories."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = model.model_dump(mode="json", by_alias=True)
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    except OSError as e:
        logger.error("Cannot write file", extra={"path": str(path), "error": str(e)})
        raise InvalidInputError(f"Cannot write {path}: {e}") from e


def sequence_to_schema(seq: UnimodularSequence) -> SequenceFile:
    return SequenceFile(alphabet=seq.alphabet, phases=seq.phases.tolist())


def pair_to_schema(pair: SequencePair) -> SequencePairFile:
    return SequencePairFile(u=sequence_to_schema(pair.u), w=sequence_to_schema(pair.w))


def array_pair_to_schema(pair: ArrayPair) -> ArrayPairFile:
    return ArrayPairFile(
        dims=pair.dims,
        U_phases=pair.u.phases.tolist(),
        W_phases=pair.w.phases.tolist(),
    )


def array_pair_from_schema(schema: ArrayPairFile) -> ArrayPair:
    return ArrayPair(UnimodularArray(schema.u_phases), UnimodularArray(schema.w_phases))


class JsonPairRepository(IPairRepository):
    """Repository storing pairs as JSON documents."""

    def load_array_pair(self, path: Path) -> ArrayPair:
        """Read an array pair file (``dims``, ``U_phases``, ``W_phases``)."""
        pair = array_pair_from_schema(read_model(path, ArrayPairFile))
        logger.info("Array pair loaded", extra={"path": str(path), "dims": list(pair.dims)})
        return pair

    def save_array_pair(self, pair: ArrayPair, path: Path) -> None:
        write_model(path, array_pair_to_schema(pair))
        logger.info("Array pair written", extra={"path": str(path), "dims": list(pair.dims)})

    def save_search_results(
        self, length: int, alphabet_size: int, pairs: list[SequencePair], path: Path
    ) -> None:
        listing = SearchResultFile(
            length=length,
            alphabet_size=alphabet_size,
            count=len(pairs),
            pairs=[pair_to_schema(p) for p in pairs],
        )
        write_model(path, listing)
        logger.info("Search results written", extra={"path": str(path), "count": len(pairs)})
