"""Shared pytest wiring: acceptance-criterion reporting."""

from __future__ import annotations

_acceptance_results: list[tuple[str, str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance_results.append((name, report.outcome, report.nodeid))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    tr = terminalreporter
    tr.write_sep("=", "acceptance criteria")
    for name, outcome, _nodeid in _acceptance_results:
        status = "PASS" if outcome == "passed" else "FAIL"
        tr.write_line(f"[{status}] {name}")
