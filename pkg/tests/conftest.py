import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from riemann_bounds import NumericMode  # noqa: E402

_acceptance_lines = []


@pytest.fixture
def exact():
    return NumericMode.exact()


@pytest.fixture
def flt():
    return NumericMode.floating()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    status = "PASS" if report.passed else "FAIL"
    _acceptance_lines.append(f"[{status}] criterion {marker.args[0]:>2}: {marker.args[1]}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_acceptance_lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
        terminalreporter.write_line(line)
