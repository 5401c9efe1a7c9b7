from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if report.when == "call" or report.failed:
        if _outcomes.get(name) != "FAIL":
            _outcomes[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    from test_acceptance import CRITERIA
    terminalreporter.section("acceptance criteria")
    for name, label in CRITERIA.items():
        if name in _outcomes:
            terminalreporter.write_line(f"CRITERION {label}: {_outcomes[name]}")
