from pathlib import Path

import pytest

from app.settings import RunSettings, load_settings


def test_load_settings_uses_defaults_when_environment_is_clear(monkeypatch, tmp_path):
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    monkeypatch.delenv("RUN_SLOW", raising=False)
    monkeypatch.delenv("WORKER_CONCURRENCY", raising=False)

    settings = load_settings()

    assert settings.data_dir == tmp_path / "data"
    assert settings.log_level == "INFO"
    assert settings.worker_concurrency == 1
    assert settings.cell_cap == 20_000_000
    assert settings.tietze_budget == 10_000
    assert settings.random_seed == 0
    assert settings.max_palette == 24
    assert (settings.perturb_max_denominator, settings.perturb_max_numerator, settings.perturb_coefficient_box) == (16, 64, 3)
    assert settings.run_slow is False


def test_load_settings_reads_overrides_from_environment(monkeypatch):
    monkeypatch.setenv("DATA_DIR", "/srv/kernels")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    monkeypatch.setenv("WORKER_CONCURRENCY", "4")
    monkeypatch.setenv("CELL_CAP", "5000")
    monkeypatch.setenv("RANDOM_SEED", "17")
    monkeypatch.setenv("RUN_SLOW", "yes")

    settings = load_settings()

    assert settings.data_dir == Path("/srv/kernels")
    assert settings.log_level == "DEBUG"
    assert settings.worker_concurrency == 4
    assert settings.cell_cap == 5000
    assert settings.random_seed == 17
    assert settings.run_slow is True


def test_unparseable_integers_fall_back_to_defaults(monkeypatch):
    monkeypatch.setenv("TIETZE_BUDGET", "lots")
    monkeypatch.setenv("RUN_SLOW", "maybe")

    settings = load_settings()

    assert settings.tietze_budget == 10_000
    assert settings.run_slow is False


def test_validate_rejects_non_positive_bounds(monkeypatch):
    monkeypatch.setenv("CELL_CAP", "0")

    settings = load_settings()

    with pytest.raises(RuntimeError, match="CELL_CAP must be a positive integer."):
        settings.validate()


def test_validate_accepts_loaded_defaults():
    settings = load_settings()

    assert isinstance(settings, RunSettings)
    settings.validate()
