import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

_LINES = []


@pytest.fixture
def report():
    """``report(n, title, ok, detail, elapsed=None, limit=None)`` records one
    acceptance line and fails the test when the criterion is not met."""

    def _report(n, title, ok, detail, elapsed=None, limit=None):
        in_time = limit is None or elapsed <= limit
        status = "PASS" if ok and in_time else "FAIL"
        timing = "" if elapsed is None else f" [{elapsed:.1f}s" + (f", limit {limit}s]" if limit else "]")
        line = f"criterion {n}: {status} {title}: {detail}{timing}"
        _LINES.append((n, line))
        print(line)
        assert ok, line
        assert in_time, line

    return _report


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_LINES):
        terminalreporter.write_line(line)
