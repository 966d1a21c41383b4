"""Shared pytest hooks: the acceptance-criteria summary block.

After the normal test summary, print one PASS/FAIL line per acceptance
criterion that ran, so a plain `pytest -v` log shows the checklist at a
glance even when everything else is green.
"""

from __future__ import annotations

import re

CRITERIA = 13
_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)\b")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes: dict[int, bool] = {}
    for key, reports in terminalreporter.stats.items():
        if key not in ("passed", "failed", "error"):
            continue
        for rep in reports:
            match = _PATTERN.search(getattr(rep, "nodeid", ""))
            if match:
                n = int(match.group(1))
                outcomes[n] = outcomes.get(n, True) and key == "passed"
    if not outcomes:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in range(1, CRITERIA + 1):
        if n in outcomes:
            verdict = "PASS" if outcomes[n] else "FAIL"
            terminalreporter.write_line(f"ACCEPTANCE {n} {verdict}")
