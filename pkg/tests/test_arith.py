from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from algcut.arith import (
    LaurentSeries,
    Poly,
    PrecisionError,
    format_rational,
    laurent_arith,
    parse_rational,
    residue,
    series_exp,
    series_invert,
)

from conftest import nonzero_rationals, rationals, truncated_series

T = sp.symbols("t")


def sympy_coeffs(expr, lo, hi):
    """Independent oracle: Laurent coefficients of expr at t=0 for lo <= k < hi."""
    ser = sp.series(expr, T, 0, hi).removeO()
    ser = sp.expand(ser)
    return {k: Fraction(str(ser.coeff(T, k))) for k in range(lo, hi)}


def test_series_exp_examples():
    assert series_exp(0, 4).coeffs == {0: 1}
    assert series_exp(-1, 3).coeffs == {0: 1, 1: -1, 2: Fraction(1, 2)}
    assert series_exp(2, 3).coeffs == {0: 1, 1: 2, 2: 2}
    assert series_exp(2, 3).prec == 3
    with pytest.raises(ValueError):
        series_exp(1, 0)


@pytest.mark.parametrize("c", [-3, Fraction(1, 2), 5])
def test_series_exp_matches_sympy(c):
    s = series_exp(c, 7)
    expected = sympy_coeffs(sp.exp(sp.Rational(str(c)) * T), 0, 7)
    assert all(s.coefficient(k) == expected[k] for k in range(7))


def test_invert_monomial_and_constant():
    assert series_invert(LaurentSeries({1: 1})) == LaurentSeries({-1: 1})
    inv = series_invert(LaurentSeries({0: 2, 1: 0}, prec=2))
    assert inv.coefficient(0) == Fraction(1, 2)
    assert inv.coefficient(1) == 0


def test_invert_one_minus_exp():
    s = 1 - series_exp(-1, 4)
    inv = series_invert(s)
    assert inv.valuation == -1
    assert inv.prec == 2
    assert inv.coeffs == {-1: 1, 0: Fraction(1, 2), 1: Fraction(1, 12)}
    # multiply back
    prod = s * inv
    assert prod.agrees_with(LaurentSeries({0: 1}))
    assert prod.prec >= 1
    # and against an independent expansion
    expected = sympy_coeffs(1 / (1 - sp.exp(-T)), -1, 2)
    assert all(inv.coefficient(k) == v for k, v in expected.items())


def test_invert_zero_raises():
    with pytest.raises(ZeroDivisionError):
        series_invert(LaurentSeries({}, prec=3))


def test_invert_exact_polynomial_needs_terms():
    with pytest.raises(ValueError):
        series_invert(LaurentSeries({0: 1, 1: 1}))
    inv = series_invert(LaurentSeries({0: 1, 1: 1}), terms=4)
    assert inv.coeffs == {0: 1, 1: -1, 2: 1, 3: -1}
    assert inv.prec == 4


def test_laurent_arith_examples():
    assert laurent_arith(LaurentSeries({-1: 1}), LaurentSeries({1: 1}), "mul") == LaurentSeries({0: 1})
    a = LaurentSeries({-1: 1, 0: 1})
    assert laurent_arith(a, LaurentSeries({-1: -1}), "add") == LaurentSeries({0: 1})
    with pytest.raises(ValueError):
        laurent_arith(a, a, "div")


def test_mul_precision_rule():
    a = LaurentSeries({1: 1, 2: 3}, prec=4)  # valuation 1
    b = LaurentSeries({-2: 2}, prec=0)  # valuation -2
    # unknown from min(4 + (-2), 0 + 1) = 1
    assert (a * b).prec == 1


def test_residue_examples():
    assert residue(LaurentSeries({-1: 1})) == 1
    assert residue(Poly([3, 5])) == 0
    for c in (1, -2, Fraction(3, 7)):
        for n in (1, 2, 4):
            q = LaurentSeries({n - 1: 1}) * series_invert(LaurentSeries({n: c}))
            assert residue(q) == 1 / Fraction(c)


def test_residue_needs_window():
    with pytest.raises(PrecisionError):
        residue(LaurentSeries({-3: 1}, prec=-1))
    assert residue(LaurentSeries({-3: 1}, prec=0)) == 0


def test_rational_rendering():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational(" -3/6 ") == Fraction(-1, 2)
    for bad in ("0.5", "1e3", "", "1/0", "x"):
        with pytest.raises(ValueError):
            parse_rational(bad)


@given(truncated_series())
def test_inverse_property(s):
    prod = s * series_invert(s)
    assert prod.prec >= 1
    assert prod.agrees_with(LaurentSeries({0: 1}))


@given(truncated_series(exact=True), truncated_series(exact=True))
def test_residue_linear_exact(a, b):
    assert residue(a + b) == residue(a) + residue(b)


@given(truncated_series(), truncated_series(), st.integers(0, 4))
def test_truncation_soundness(a, b, extra):
    # extend both inputs by `extra` arbitrary-but-fixed coefficients: every coefficient
    # the short computation reports must survive in the long one
    def extend(s):
        c = s.coeffs
        for k in range(s.prec, s.prec + extra):
            c[k] = Fraction(k * k + 1, 3)
        return LaurentSeries(c, s.prec + extra)

    A, B = extend(a), extend(b)
    assert (a * b).agrees_with(A * B)
    assert (a + b).agrees_with(A + B)
    assert series_invert(a).agrees_with(series_invert(A))


@pytest.mark.parametrize("ws", [[1], [-1], [3], [1, 1], [-1, 2], [1, 2, -3]])
def test_todd_series_against_sympy(ws):
    order = len(ws) + 3
    d = LaurentSeries({0: 1})
    for a in ws:
        d = d * (1 - series_exp(-a, order))
    inv = series_invert(d)
    expr = 1
    for a in ws:
        expr = expr / (1 - sp.exp(-a * T))
    expected = sympy_coeffs(expr, -len(ws), inv.prec)
    assert all(inv.coefficient(k) == v for k, v in expected.items())


@given(st.dictionaries(st.integers(0, 5), rationals), st.dictionaries(st.integers(0, 5), rationals))
def test_poly_ring_ops(a, b):
    p, q = Poly(a), Poly(b)
    assert (p + q) - q == p
    assert p * q == q * p
    assert (p * q).to_series() == p.to_series() * q.to_series()


def test_no_floats():
    with pytest.raises(TypeError):
        Poly([0.5])
    with pytest.raises(TypeError):
        series_exp(0.5, 3)
