from app.worker import ordered_map, resolve_jobs

_seen: list[int] = []


def _remember(value: int) -> None:
    _seen.append(value)


def test_resolve_jobs_prefers_explicit_value_and_clamps(monkeypatch):
    monkeypatch.setenv("WORKER_CONCURRENCY", "3")

    assert resolve_jobs(None) == 3
    assert resolve_jobs(5) == 5
    assert resolve_jobs(0) == 1


def test_ordered_map_keeps_input_order_across_processes():
    items = list(range(-40, 40))

    assert ordered_map(abs, items, jobs=2, chunksize=3) == [abs(item) for item in items]
    assert ordered_map(abs, [], jobs=4) == []


def test_ordered_map_runs_initializer_inline_for_one_job():
    _seen.clear()

    assert ordered_map(str, [1, 2], jobs=1, initializer=_remember, initargs=(7,)) == ["1", "2"]
    assert _seen == [7]
