import math

import numpy as np
import pytest

from asymgon.geometry import DiameterSet


def random_diameters(rng: np.random.Generator, n: int) -> DiameterSet:
    """Uniform random diameters, redrawn until no two nearly coincide."""
    while True:
        angles = np.sort(rng.uniform(0.0, math.pi, n))
        gaps = np.diff(np.append(angles, angles[0] + math.pi))
        if gaps.min() > 1e-6:
            return DiameterSet(tuple(angles))


def jittered_diameters(rng: np.random.Generator, n: int) -> DiameterSet:
    """One random diameter per slot of width pi/n: always well separated."""
    return DiameterSet(tuple((np.arange(n) + rng.uniform(0.0, 0.5, n)) * math.pi / n))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES: list[str] = []


def report_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
