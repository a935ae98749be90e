import re

import pytest

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter):
    lines = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call" and outcome == "passed":
                continue
            m = _CRITERION.search(rep.nodeid)
            if m:
                num, name = int(m.group(1)), m.group(2)
                ok = outcome == "passed" and lines.get(num, ("", True))[1]
                lines[num] = (name, ok)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(lines):
        name, ok = lines[num]
        terminalreporter.write_line(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {name}")
