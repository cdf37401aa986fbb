"""
Base repository class for JSON documents on disk or standard streams.
"""
import json
import sys
from pathlib import Path
from typing import Any, Generic, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from src.exceptions import InputFormatError

ModelType = TypeVar("ModelType", bound=BaseModel)

STDIO = "-"


class BaseRepository(Generic[ModelType]):
    """
    Base repository providing load/dump operations for one document model.

    A path of "-" reads standard input.
    """

    def __init__(self, model: Type[ModelType]):
        self.model = model

    def parse(self, text: str, source: str = "<string>") -> ModelType:
        """Validate JSON text into a document."""
        try:
            return self.model.model_validate_json(text)
        except ValidationError as e:
            first = e.errors()[0]
            location = ".".join(str(part) for part in first.get("loc", ())) or "document"
            raise InputFormatError(f"{location}: {first.get('msg', 'invalid value')}", source=source)

    def load(self, path: Union[str, Path]) -> ModelType:
        """Read and validate a document from a file or standard input."""
        source = str(path)
        try:
            text = sys.stdin.read() if source == STDIO else Path(path).read_text(encoding="utf-8")
        except (FileNotFoundError, IsADirectoryError, PermissionError):
            raise
        except (OSError, UnicodeDecodeError) as e:
            raise InputFormatError(f"cannot read input: {e}", source=source)
        return self.parse(text, source)

    def dump(self, document: ModelType) -> str:
        """Deterministic JSON text: sorted keys, fixed indentation, trailing newline."""
        payload: Any = document.model_dump(mode="json", exclude_none=True)
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

