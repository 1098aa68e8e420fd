import random

import pytest
from hypothesis import strategies as st

from fembed.setrep import UltimatelyPeriodic, normalize

ACCEPTANCE_LINES: list[str] = []


@st.composite
def periodic_sets(draw, max_p=8, max_q=12):
    p = draw(st.integers(0, max_p))
    q = draw(st.integers(1, max_q))
    bits = draw(st.lists(st.integers(0, 1), min_size=p, max_size=p))
    pattern = draw(st.frozensets(st.integers(0, q - 1)))
    return UltimatelyPeriodic(tuple(bits), q, pattern)


def random_up(rng: random.Random, max_p: int, max_q: int, infinite: bool = False):
    while True:
        p = rng.randint(0, max_p)
        q = rng.randint(1, max_q)
        bits = tuple(rng.randint(0, 1) for _ in range(p))
        pattern = frozenset(r for r in range(q) if rng.random() < 0.5)
        s = normalize(UltimatelyPeriodic(bits, q, pattern))
        if not infinite or isinstance(s, UltimatelyPeriodic):
            return s


def as_periodic(s):
    """(p, q) of an exact set, treating a finite set as p = max + 1, q = 1."""
    if isinstance(s, UltimatelyPeriodic):
        return s.p, s.q
    return (s.elements[-1] + 1 if s.elements else 0), 1


@pytest.fixture
def acceptance():
    def record(criterion: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
