from __future__ import annotations

import os
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from gaussmaps.exact import UniPoly
from gaussmaps.function_field import CurveModel

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def xn_minus_1(k: int) -> UniPoly:
    return UniPoly([-1] + [0] * (k - 1) + [1])


@pytest.fixture(scope="session")
def hyp3():
    return CurveModel(2, xn_minus_1(8))


@pytest.fixture(scope="session")
def trig7():
    return CurveModel(3, xn_minus_1(9))


@pytest.fixture(scope="session")
def trig4():
    return CurveModel(3, xn_minus_1(6))


@pytest.fixture(scope="session")
def fermat5():
    return CurveModel(5, UniPoly([-1, 0, 0, 0, 0, -1]))


GOLDEN = Path(__file__).parent / "golden" / "verify_paper.json"
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def verify_run():
    """`verify-paper --json` through the CLI, once per session, with two threads.

    The golden file was produced with one thread, so comparing the two also
    covers determinism across thread counts.
    """
    proc = subprocess.run(
        [sys.executable, "-m", "gaussmaps.cli", "verify-paper", "--json", "--jobs", "2"],
        capture_output=True, text=True, timeout=900)
    return proc


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
