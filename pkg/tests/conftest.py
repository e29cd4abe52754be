from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qga import samples  # noqa: E402

RANDOM_SUITE_SIZE = 240
RANDOM_SUITE_SEED = 2024

_acceptance: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, text): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, text = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[number] = ("PASS" if report.passed else "FAIL", text)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        verdict, text = _acceptance[number]
        terminalreporter.write_line(f"AC{number:<2} {verdict}  {text}")


@pytest.fixture(scope="session")
def random_algebras():
    return samples.random_suite(RANDOM_SUITE_SIZE, seed=RANDOM_SUITE_SEED, max_vertices=6)
