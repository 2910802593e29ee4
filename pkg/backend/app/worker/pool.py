"""Ordered parallel map over independent work items."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from app.settings import load_settings

logger = logging.getLogger(__name__)


def resolve_jobs(jobs: int | None) -> int:
    """Explicit worker count, else WORKER_CONCURRENCY; never below one."""
    if jobs is None:
        jobs = load_settings().worker_concurrency
    return max(1, int(jobs))


def ordered_map(
    func: Callable[[Any], Any],
    items: Iterable[Any],
    jobs: int | None = None,
    initializer: Callable[..., None] | None = None,
    initargs: tuple = (),
    chunksize: int = 16,
) -> list[Any]:
    """Results in input order regardless of scheduling; ``jobs`` 1 runs in this process."""
    work = list(items)
    workers = min(resolve_jobs(jobs), max(1, len(work)))
    if workers == 1:
        if initializer is not None:
            initializer(*initargs)
        return [func(item) for item in work]
    logger.info("dispatching %s items to %s workers", len(work), workers)
    with ProcessPoolExecutor(max_workers=workers, initializer=initializer, initargs=initargs) as pool:
        return list(pool.map(func, work, chunksize=max(1, int(chunksize))))


__all__ = ["ordered_map", "resolve_jobs"]
