import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

# criterion number -> (title, [outcomes])
_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    num, title = marker
    entry = _criteria.setdefault(num, (title, []))
    if report.when == "call" or report.outcome != "passed":
        entry[1].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    m = item.get_closest_marker("criterion")
    if m is not None:
        outcome.get_result().criterion = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, outcomes = _criteria[num]
        ok = bool(outcomes) and all(o == "passed" for o in outcomes)
        n_ok = sum(o == "passed" for o in outcomes)
        terminalreporter.write_line(
            f"ACCEPTANCE criterion {num} ({title}): {'PASS' if ok else 'FAIL'}  [{n_ok}/{len(outcomes)} checks]"
        )
