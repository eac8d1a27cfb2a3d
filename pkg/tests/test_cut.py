from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from algcut.cut import (
    FixedPointDatum,
    InstabilityType,
    Section,
    classify_cut_point,
    cut_fixed_inventory,
    psi_weight_check,
)
from algcut.weights import NonRegularLevelError, RepeatedWeightError, all_patterns, is_in_upper, is_stable

from conftest import distinct_weights, weights_any

I = InstabilityType


def test_classify_examples():
    assert classify_cut_point({1, 2}, (-1, 1), Section.INFINITY_SECTION) is I.TYPE_I
    assert classify_cut_point({1, 2}, (-1, -3), Section.FINITE_NONZERO) is I.TYPE_III
    assert classify_cut_point({1, 2}, (-1, 2), Section.ZERO_SECTION) is I.STABLE


def test_classify_affine_labels():
    assert classify_cut_point({1}, (2, -1), Section.ZERO_SECTION, affine=True) is I.TYPE_II_PRIME
    assert classify_cut_point({2}, (2, -1), Section.FINITE_NONZERO, affine=True) is I.TYPE_III_PRIME
    assert classify_cut_point({1}, (2, -1), Section.FINITE_NONZERO, affine=True) is I.STABLE
    with pytest.raises(ValueError):
        classify_cut_point({1}, (2, -1), Section.INFINITY_SECTION, affine=True)


def test_classify_rejects_zero_weight():
    with pytest.raises(ValueError):
        classify_cut_point({1}, (0, 1), Section.ZERO_SECTION)


def test_inventory_p1():
    inv = cut_fixed_inventory((0, 1), "1/2")
    assert [(d.label, d.tangent_weights) for d in inv.upper_fixed] == [("e2", (-1,))]
    assert inv.reduced_present and inv.reduced_normal_weight == 1


def test_inventory_empty_quotient():
    inv = cut_fixed_inventory((1, 2, 3), 0)
    assert [d.tangent_weights for d in inv.upper_fixed] == [(1, 2), (-1, 1), (-2, -1)]
    assert not inv.reduced_present


def test_inventory_symmetric():
    inv = cut_fixed_inventory((-1, 1), 0)
    assert [(d.label, d.tangent_weights) for d in inv.upper_fixed] == [("e2", (-2,))]
    assert inv.reduced_present


def test_inventory_errors():
    with pytest.raises(RepeatedWeightError):
        cut_fixed_inventory((0, 0, 1), "1/2")
    with pytest.raises(NonRegularLevelError):
        cut_fixed_inventory((0, 1), 1)


def test_fixed_point_datum_validation():
    with pytest.raises(ValueError):
        FixedPointDatum("p", (1, 0))
    with pytest.raises(ValueError):
        FixedPointDatum("p", ())


def test_psi_examples():
    r = psi_weight_check((-1, 1), 2)
    assert r.antidiagonal_weights == Counter([-1, 1, -3, -1])
    assert r.diagonal_weights == Counter([-1, 1, 1, 3])
    assert r.zero_free
    with pytest.raises(ValueError):
        psi_weight_check((-1, 1), 1)
    with pytest.raises(ValueError):
        psi_weight_check((0, 1), 3)


@given(weights_any(nonzero=True), st.integers(1, 6))
def test_psi_zero_free(w, extra):
    assert psi_weight_check(w, max(w.weights) + extra).zero_free


@given(weights_any(nonzero=True))
def test_affine_chart_compatibility(w):
    for p in all_patterns(len(w)):
        fin = classify_cut_point(p, w, Section.FINITE_NONZERO, affine=True)
        zero = classify_cut_point(p, w, Section.ZERO_SECTION, affine=True)
        assert (fin is I.STABLE) == is_in_upper(p, w, 0)
        assert (zero is I.STABLE) == is_stable(p, w, 0)
        # the stable locus of X x P^1 never meets the infinity section
        assert classify_cut_point(p, w, Section.INFINITY_SECTION) is I.TYPE_I


@given(distinct_weights(), st.integers(-19, 18))
def test_inventory_counts(w, k):
    q = Fraction(2 * k + 1, 2)
    inv = cut_fixed_inventory(w, q)
    assert len(inv.upper_fixed) == sum(a > q for a in w)
    assert len(inv.upper_fixed) + len(inv.lower_fixed) == len(w)
    assert inv.reduced_present == (any(a > q for a in w) and any(a < q for a in w))
    for d in inv.upper_fixed:
        assert len(d.tangent_weights) == w.dim
