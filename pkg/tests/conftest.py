import sys

import pytest
from hypothesis import strategies as st

from dunwoody.words import Word


@st.composite
def words(draw, max_rank=8, max_len=12, rank=None):
    n = rank if rank is not None else draw(st.integers(1, max_rank))
    letters = draw(st.lists(
        st.integers(1, n).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len))
    return Word(n, tuple(letters))


@pytest.fixture
def tmp_json(tmp_path):
    return tmp_path / "diagram.json"


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
