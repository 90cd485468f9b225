import os
import sys
from importlib import resources
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from published import F1_NS, FOOTBALL_NS

settings.register_profile("default", max_examples=200, deadline=None)
settings.register_profile(
    "thorough", max_examples=10_000, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = Path(str(resources.files("rankdrift.data")))
EXCERPT = DATA / "f1_2012_gp1_3"


@pytest.fixture
def excerpt_manifest():
    return EXCERPT / "manifest.json"


@pytest.fixture
def f1_ns():
    return {k: list(v) for k, v in F1_NS.items()}


@pytest.fixture
def football_ns():
    return {k: list(v) for k, v in FOOTBALL_NS.items()}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
