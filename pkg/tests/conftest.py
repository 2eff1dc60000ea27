import pytest
from hypothesis import strategies as st

from tournament_lab.core import Tournament, _from_upper_bits
from tournament_lab.enumeration import Enumerator


@pytest.fixture(scope="session")
def reps(tmp_path_factory):
    return Enumerator(tmp_path_factory.mktemp("cache"))


@st.composite
def tournaments(draw, min_n=1, max_n=7) -> Tournament:
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return _from_upper_bits(n, bits)



ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
