import sys
from pathlib import Path

import pytest

GRAPHS = Path(__file__).resolve().parent.parent / "demos" / "graphs"

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): one acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, title = marker.args
    if report.when == "setup" and report.passed:
        return
    _criteria[number] = {
        "title": title,
        "passed": report.passed,
        "seconds": report.duration,
    }


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        c = _criteria[number]
        verdict = "PASS" if c["passed"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}  {c['title']}  ({c['seconds']:.1f} s)")


@pytest.fixture
def graphs_dir() -> Path:
    return GRAPHS


@pytest.fixture
def gpoly_cmd() -> list[str]:
    return [sys.executable, "-m", "gpoly"]
