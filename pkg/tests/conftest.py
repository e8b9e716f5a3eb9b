import os
import pathlib

import pytest
from hypothesis import HealthCheck, settings

import xmgraph

settings.register_profile(
    "default",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = pathlib.Path(xmgraph.__file__).parent / "data"
GOLDEN = pathlib.Path(__file__).parent / "golden"

# acceptance outcomes collected by tests/test_acceptance.py
ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def data_dir():
    return DATA


def pytest_runtest_logreport(report):
    label = getattr(report, "acceptance", None)
    for key, value in report.user_properties:
        if key == "acceptance":
            label = value
    if label is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        ACCEPTANCE[label] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0][2:])):
        terminalreporter.write_line(f"{ACCEPTANCE[label]} {label}")
