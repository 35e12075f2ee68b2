import time

import pytest

_RESULTS: dict[int, dict] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when not in ("setup", "call"):
        return
    number, title = marker.args
    entry = _RESULTS.setdefault(number, {"title": title, "ok": True, "tests": []})
    if call.excinfo is not None:
        entry["ok"] = False
    if call.when == "call":
        entry["tests"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        entry = _RESULTS[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {status}  {entry['title']}")


@pytest.fixture
def stopwatch():
    from bernoulli_euler import clear_caches

    clear_caches()

    class Watch:
        def __init__(self):
            self.start = time.perf_counter()

        @property
        def elapsed(self) -> float:
            return time.perf_counter() - self.start

    return Watch()
