"""Shared pytest wiring: surfaces acceptance criterion lines in the
terminal summary, where capture does not swallow them."""

from __future__ import annotations

criterion_lines: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in criterion_lines:
            terminalreporter.write_line(line)
