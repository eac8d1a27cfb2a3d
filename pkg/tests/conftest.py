from fractions import Fraction

from hypothesis import strategies as st

from algcut.arith import LaurentSeries
from algcut.weights import AmbientWeights

rationals = st.builds(
    Fraction, st.integers(min_value=-20, max_value=20), st.integers(min_value=1, max_value=12)
)
nonzero_rationals = rationals.filter(bool)


@st.composite
def truncated_series(draw, min_len=1, max_len=6, exact=False):
    v = draw(st.integers(min_value=-4, max_value=4))
    lead = draw(nonzero_rationals)
    rest = draw(st.lists(rationals, min_size=min_len - 1, max_size=max_len - 1))
    coeffs = {v + k: c for k, c in enumerate([lead] + rest)}
    return LaurentSeries(coeffs, None if exact else v + 1 + len(rest))


@st.composite
def distinct_weights(draw, lo=-9, hi=9, min_len=2, max_len=6):
    ws = draw(st.lists(st.integers(lo, hi), min_size=min_len, max_size=max_len, unique=True))
    return AmbientWeights(ws)


@st.composite
def weights_any(draw, lo=-6, hi=6, min_len=1, max_len=5, nonzero=False):
    elem = st.integers(lo, hi)
    if nonzero:
        elem = elem.filter(bool)
    return AmbientWeights(draw(st.lists(elem, min_size=min_len, max_size=max_len)))


@st.composite
def levels(draw):
    return Fraction(draw(st.integers(-25, 25)), draw(st.integers(1, 6)))


# acceptance criteria append (criterion, ok, detail) here; printed at session end
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
