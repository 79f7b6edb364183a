"""Print one pass/fail line per acceptance criterion at the end of the run."""

import pytest

_acceptance_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or "test_acceptance" not in item.nodeid:
        return
    doc = item.function.__doc__ or item.name
    label = doc.strip().splitlines()[0]
    _acceptance_results.append((label, report.passed, report.duration))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for label, passed, duration in _acceptance_results:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {label} ({duration:.2f}s)")
