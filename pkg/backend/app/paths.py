"""Shared filesystem path resolution for generated data files."""

from __future__ import annotations

from pathlib import Path

from app.settings import default_data_dir

P8_POLYTOPE_FILE = "p8_polytope.json"
P8_COLOURING_FILE = "p8_colouring.json"
P8_STATE_FILE = "p8_state.json"
P8_MOVES_FILE = "p8_moves.json"


def get_data_dir() -> Path:
    return default_data_dir()


def p8_paths(data_dir: Path | None = None) -> dict[str, Path]:
    root = Path(data_dir) if data_dir is not None else get_data_dir()
    return {
        "polytope": root / P8_POLYTOPE_FILE,
        "colouring": root / P8_COLOURING_FILE,
        "state": root / P8_STATE_FILE,
        "moves": root / P8_MOVES_FILE,
    }
