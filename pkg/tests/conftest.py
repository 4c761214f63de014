import os
import random

import pytest

from gqc import GF, PolyVec

DATA = os.path.join(os.path.dirname(__file__), "data")


def data_path(name: str) -> str:
    return os.path.join(DATA, name)


def pv(profile, exps) -> PolyVec:
    """PolyVec from per-component exponent lists (binary shorthand)."""
    return PolyVec.from_exponents(profile, exps)


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(params=[(2, 1, None), (3, 1, None), (2, 2, None), (3, 2, [2, 2, 1]), (2, 8, None)],
                ids=["GF2", "GF3", "GF4", "GF9", "GF256"])
def field(request):
    p, s, modulus = request.param
    return GF(p, s, modulus)


# One line per acceptance criterion, filled in by test_acceptance.py and
# echoed in the terminal summary so it shows without ``-s``.
ACCEPTANCE: dict[int, str] = {}


def report(criterion: int, ok: bool, detail: str) -> None:
    line = f"criterion {criterion:2d}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE[criterion] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
