"""Typed runtime settings read from the environment."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path


def _env_bool(name: str, default: bool) -> bool:
    raw = str(os.getenv(name, str(default))).strip().lower()
    if raw in {"1", "true", "yes", "on"}:
        return True
    if raw in {"0", "false", "no", "off"}:
        return False
    return default


def _env_int(name: str, default: int) -> int:
    raw = str(os.getenv(name, str(default))).strip()
    try:
        return int(raw)
    except (TypeError, ValueError):
        return default


def _repo_root() -> Path:
    source_root = Path(__file__).resolve().parents[2]
    if (source_root / "pyproject.toml").exists():
        return source_root
    cwd = Path.cwd()
    if (cwd / "pyproject.toml").exists() and (cwd / "backend").exists():
        return cwd
    return source_root


def default_data_dir() -> Path:
    configured = str(os.getenv("DATA_DIR", "") or "").strip()
    if configured:
        return Path(configured)
    return _repo_root() / "data"


@dataclass(frozen=True)
class RunSettings:
    data_dir: Path
    log_level: str
    worker_concurrency: int
    cell_cap: int
    tietze_budget: int
    random_seed: int
    max_palette: int
    perturb_max_denominator: int
    perturb_max_numerator: int
    perturb_coefficient_box: int
    run_slow: bool

    def validate(self) -> None:
        for name in (
            "worker_concurrency",
            "cell_cap",
            "tietze_budget",
            "max_palette",
            "perturb_max_denominator",
            "perturb_max_numerator",
            "perturb_coefficient_box",
        ):
            if int(getattr(self, name)) <= 0:
                raise RuntimeError(f"{name.upper()} must be a positive integer.")


def load_settings() -> RunSettings:
    log_level = str(os.getenv("LOG_LEVEL", "INFO") or "INFO").strip().upper() or "INFO"
    return RunSettings(
        data_dir=default_data_dir(),
        log_level=log_level,
        worker_concurrency=_env_int("WORKER_CONCURRENCY", 1),
        cell_cap=_env_int("CELL_CAP", 20_000_000),
        tietze_budget=_env_int("TIETZE_BUDGET", 10_000),
        random_seed=_env_int("RANDOM_SEED", 0),
        max_palette=_env_int("MAX_PALETTE", 24),
        perturb_max_denominator=_env_int("PERTURB_MAX_DENOMINATOR", 16),
        perturb_max_numerator=_env_int("PERTURB_MAX_NUMERATOR", 64),
        perturb_coefficient_box=_env_int("PERTURB_COEFFICIENT_BOX", 3),
        run_slow=_env_bool("RUN_SLOW", False),
    )


__all__ = ["RunSettings", "default_data_dir", "load_settings", "_env_bool", "_env_int"]
