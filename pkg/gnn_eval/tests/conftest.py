"""Acceptance reporter for the classifier-harness criteria.

Same line protocol as the sparsifier suite: every criterion prints one
[PASS]/[FAIL]/[SKIP] line, replayed in a terminal summary section.
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
        terminalreporter.section("classifier acceptance criteria")
        for line in _LINES:
            terminalreporter.line(line)
