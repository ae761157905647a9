"""Shared fixtures and the acceptance-suite terminal summary."""
from __future__ import annotations

import random

import pytest

from thinlab import IntMatrix, get_entry

T = IntMatrix(((1, 1), (0, 1)))
S = IntMatrix(((0, 1), (-1, 0)))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


@pytest.fixture
def ex(request):
    return get_entry


def random_int_matrix(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> IntMatrix:
    return IntMatrix(tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(n)))


def random_sl2(rng: random.Random, bound: int = 10 ** 6) -> IntMatrix:
    """Random SL2(Z) matrix with entries bounded by ``bound``.

    Built as an alternating product of T-powers and S, which keeps the
    determinant exactly 1 while the entries random-walk upward.
    """
    m = IntMatrix.identity(2)
    while True:
        a = rng.randint(-6, 6)
        step = (T ** a) @ S
        nxt = m @ step
        if max(abs(x) for row in nxt.entries for x in row) > bound:
            if not m.is_identity():
                return m
            m = IntMatrix.identity(2)
            continue
        m = nxt
        if rng.random() < 0.1 and not m.is_identity():
            return m


# ---------------------------------------------------------------------------
# acceptance summary: one pass/fail line per criterion at the end of the run

_ACCEPTANCE_RESULTS: dict[str, str] = {}


def record_acceptance(criterion: str, description: str) -> None:
    # registration happens in the test body; outcome comes from the report hook
    _ACCEPTANCE_RESULTS.setdefault(criterion, description)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("acceptance")
    if marker:
        crit = marker.kwargs.get("criterion", item.name)
        desc = marker.kwargs.get("description", "")
        status = "PASS" if report.passed else "FAIL"
        _ACCEPTANCE_RESULTS[crit] = f"{status}  {desc}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_ACCEPTANCE_RESULTS, key=lambda c: (len(c), c)):
        terminalreporter.write_line(f"criterion {crit}: {_ACCEPTANCE_RESULTS[crit]}")


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(criterion, description): acceptance-suite criterion"
    )
