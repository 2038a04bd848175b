from __future__ import annotations

import re
from collections import defaultdict

CRITERIA = {
    1: "bracket tables",
    2: "4x4 / 6x6 isomorphism",
    3: "subgroup taxonomy",
    4: "oscillator roundtrip",
    5: "spectra",
    6: "canonical gate",
    7: "uncertainty gate",
    8: "realization cross-checks",
    9: "catalog integrity",
}

_outcomes: dict[int, list[str]] = defaultdict(list)
_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes[int(m.group(1))].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            status = "NOT RUN"
        elif all(r == "passed" for r in results):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"criterion {n} ({title}): {status}")
