import re

import pytest

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_outcomes: dict[int, tuple[str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = _CRITERION.match(item.name)
    if not m or report.when not in ("setup", "call"):
        return
    number = int(m.group(1))
    label = m.group(2).replace("_", " ")
    previous = _outcomes.get(number, (label, True))[1]
    if report.when == "setup" and report.passed:
        # the call phase decides; setup only matters when it fails
        _outcomes.setdefault(number, (label, True))
        return
    _outcomes[number] = (label, previous and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        label, ok = _outcomes[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {label}")
