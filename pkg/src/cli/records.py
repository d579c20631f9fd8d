"""Append-only store of computed Laman numbers, one JSON object per line."""

import logging
from datetime import datetime, timezone
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError

from src import __version__
from src.graph.canonical import FULL_HEX_LENGTH, CanonicalKey
from src.utils.errors import RecordConflictError

logger = logging.getLogger(__name__)


def record_key(key: CanonicalKey) -> str:
    """Full-width digest of a canonical key; short digests are for display only."""
    return key.hexdigest(FULL_HEX_LENGTH)


class RunRecord(BaseModel):
    key: str
    n_vertices: int
    n_edges: int
    laman_number: int = Field(ge=0)
    stats: dict[str, float] = Field(default_factory=dict)
    version: str = __version__
    timestamp: str = Field(default_factory=lambda: datetime.now(timezone.utc).isoformat())


class RunRecordStore:
    """Records keyed by canonical fingerprint; a key never changes its number."""

    def __init__(self, path: str):
        """Initialize the store.

        Args:
            path: Path to the JSON-lines file.
        """
        self._path = Path(path)
        self._numbers: dict[str, int] = {}
        self._load()

    def _load(self) -> None:
        """Load existing records, skipping unreadable lines."""
        if not self._path.exists():
            return

        with open(self._path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    record = RunRecord.model_validate_json(line)
                except ValidationError as e:
                    logger.warning(f"Skipping malformed record at {self._path}:{lineno}: {e}")
                    continue
                self._numbers.setdefault(record.key, record.laman_number)

    def lookup(self, key: str) -> int | None:
        return self._numbers.get(key)

    def append(self, record: RunRecord) -> None:
        """Append a record.

        Raises:
            RecordConflictError: the key is already stored with another number.
        """
        known = self._numbers.get(record.key)
        if known is not None and known != record.laman_number:
            logger.error(f"Record conflict for {record.key}: stored {known}, new {record.laman_number}")
            raise RecordConflictError(
                f"Fingerprint {record.key} is recorded as {known}, not {record.laman_number}"
            )

        self._path.parent.mkdir(parents=True, exist_ok=True)
        with open(self._path, "a", encoding="utf-8") as f:
            f.write(record.model_dump_json() + "\n")
        self._numbers[record.key] = record.laman_number

    def __len__(self) -> int:
        return len(self._numbers)
