from app.worker.pool import ordered_map, resolve_jobs

__all__ = ["ordered_map", "resolve_jobs"]
