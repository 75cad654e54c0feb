"""Shared pytest configuration: the acceptance-criteria reporter.

Acceptance tests register one line per criterion through the
``acceptance`` fixture; the lines are echoed immediately (visible with
-s) and replayed in a terminal summary section so the verdicts survive
output capture.
"""

import pytest

_LINES: list[str] = []


class AcceptanceReporter:
    def check(self, name: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] {name}" + (f": {detail}" if detail else "")
        _LINES.append(line)
        print(line)
        assert ok, line

    def skip(self, name: str, reason: str) -> None:
        line = f"[SKIP] {name}: {reason}"
        _LINES.append(line)
        print(line)
        pytest.skip(reason)


@pytest.fixture(scope="session")
def acceptance() -> AcceptanceReporter:
    return AcceptanceReporter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.line(line)
