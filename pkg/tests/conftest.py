import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from qschubert.core import RectContext  # noqa: E402

RUNNING = RectContext(5, 11)


@st.composite
def context_and_partitions(draw, count=1, max_n=8):
    n = draw(st.integers(min_value=2, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n - 1))
    ctx = RectContext(k, n)
    parts = []
    for _ in range(count):
        raw = draw(st.lists(st.integers(0, n - k), min_size=k, max_size=k))
        parts.append(tuple(p for p in sorted(raw, reverse=True) if p))
    return (ctx, *parts)


@pytest.fixture
def running():
    return RUNNING


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
