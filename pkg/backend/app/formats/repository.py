"""JSON persistence for data files and reports."""

from __future__ import annotations

import json
import logging
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any, TypeVar

from pydantic import BaseModel, ValidationError

from app.errors import InputError

logger = logging.getLogger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)


class DataRepository:
    """Data files under one directory; writes replace the target atomically."""

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)

    def path(self, *parts: str) -> Path:
        return self.data_dir.joinpath(*parts)

    def write_json(self, path: Path, payload: Any) -> Path:
        """Write JSON atomically by replacing the target file after a temp-file flush."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with tempfile.NamedTemporaryFile(
            mode="w",
            encoding="utf-8",
            dir=path.parent,
            prefix=f".{path.name}.",
            suffix=".tmp",
            delete=False,
        ) as handle:
            json.dump(payload, handle, indent=2, default=_json_default)
            handle.write("\n")
            tmp = Path(handle.name)
        os.replace(tmp, path)
        return path

    def read_json(self, path: Path, default: Any):
        """Read JSON defensively and fall back when the file is missing or malformed."""
        path = Path(path)
        if not path.exists():
            return default
        try:
            with open(path, encoding="utf-8") as handle:
                return json.load(handle)
        except Exception:
            logger.warning("unreadable JSON in %s", path)
            return default

    def write_model(self, path: Path, model: BaseModel) -> Path:
        return self.write_json(path, model.model_dump(mode="json"))

    def load_model(self, path: Path, model_type: type[ModelT]) -> ModelT:
        path = Path(path)
        if not path.exists():
            raise InputError(f"missing_file:{path}")
        try:
            with open(path, encoding="utf-8") as handle:
                payload = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"malformed_json:{path}") from exc
        try:
            return model_type.model_validate(payload)
        except ValidationError as exc:
            first = exc.errors()[0]
            location = ".".join(str(part) for part in first.get("loc", ()))
            raise InputError(f"invalid_{model_type.__name__}:{location} {first.get('msg', '')}".rstrip()) from exc


def _json_default(value: Any) -> Any:
    """Exact rationals as [numerator, denominator]; tuples and sets as lists."""
    if isinstance(value, Fraction):
        return [value.numerator, value.denominator]
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"Object of type {value.__class__.__name__} is not JSON serializable")


__all__ = ["DataRepository"]
