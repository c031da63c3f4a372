from collections import OrderedDict

import pytest

_criteria = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "passed": True, "tests": 0})
    if report.when == "call":
        entry["tests"] += 1
    if report.failed:
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        status = "PASS" if e["passed"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {e['title']} ({e['tests']} tests)")
