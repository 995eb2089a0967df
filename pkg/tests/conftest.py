from fractions import Fraction

from hypothesis import strategies as st

from invseries import Series

small_q = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
nonzero_q = small_q.filter(bool)


@st.composite
def series(draw, order=None, c0=None, min_order=0, max_order=8):
    n = draw(st.integers(min_order, max_order)) if order is None else order
    cs = draw(st.lists(small_q, min_size=n + 1, max_size=n + 1))
    if c0 is not None:
        cs[0] = Fraction(c0)
    return Series(cs)


@st.composite
def reversible(draw, max_order=10):
    n = draw(st.integers(1, max_order))
    cs = draw(st.lists(small_q, min_size=n + 1, max_size=n + 1))
    cs[0] = Fraction(0)
    cs[1] = draw(nonzero_q)
    return Series(cs)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
