"""Collects one verdict line per acceptance criterion and prints them at the
end of the run."""

from __future__ import annotations

import pytest

VERDICTS: dict[int, str] = {}


@pytest.fixture
def verdict():
    def record(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        VERDICTS[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter) -> None:
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[k])
