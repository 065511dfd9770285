"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_OUTCOMES: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if report.passed:
            status = "PASS"
        elif hasattr(report, "wasxfail"):
            status = "FAIL (expected, see ledger)"
        elif report.skipped:
            status = "SKIP"
        else:
            status = "FAIL"
        _OUTCOMES[label] = (status, title)


def _sort_key(label):
    num = "".join(ch for ch in label if ch.isdigit())
    return int(num), label


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_OUTCOMES, key=_sort_key):
        status, title = _OUTCOMES[label]
        terminalreporter.write_line(f"{status} criterion {label}: {title}")
