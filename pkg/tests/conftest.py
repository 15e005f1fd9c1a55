import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.module.__name__.endswith("test_acceptance"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance.append((report.outcome.upper(), doc, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for outcome, doc, duration in _acceptance:
        terminalreporter.write_line(f"{outcome:<6} {doc}  ({duration:.2f}s)")
