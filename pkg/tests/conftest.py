import time
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from prefix_spectra import colored_group as cg

settings.register_profile("default", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"


@st.composite
def colored_perms(draw, m=None, n=None, max_m=6, max_n=6):
    m = draw(st.integers(1, max_m)) if m is None else m
    n = draw(st.integers(1, max_n)) if n is None else n
    symbols = draw(st.permutations(range(1, n + 1)))
    colors = draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
    return cg.ColoredPermutation(m, n, tuple(symbols), tuple(colors))


@st.composite
def same_group(draw, k=2, max_m=6, max_n=6):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    return tuple(draw(colored_perms(m=m, n=n)) for _ in range(k))


@pytest.fixture
def golden():
    return lambda name: (GOLDEN / name).read_text()


def pytest_sessionstart(session):
    session.config._t0 = time.perf_counter()


def pytest_terminal_summary(terminalreporter, config):
    elapsed = time.perf_counter() - config._t0
    verdict = "PASS" if elapsed < 300 else "FAIL"
    terminalreporter.write_line(f"[criterion 10] {verdict} full test run {elapsed:.1f}s (limit 300s)")
