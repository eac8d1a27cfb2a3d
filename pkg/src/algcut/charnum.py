"""Euler characteristic and Todd genus of a torus quotient from fixed points.

Both are sums over the isolated fixed points above the cutting level.  The
Todd genus is always computed from the series residue of
1 / prod_i (1 - exp(-t a_i)); the short closed form is kept only for
comparison since it does not reproduce the residue in general.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import prod
from typing import Iterable, Optional, Sequence

from .arith import LaurentSeries, PrecisionError, Poly, residue, series_exp, series_invert
from .cut import FixedPointDatum, cut_fixed_inventory
from .localization import ORBIFOLD, euler_class
from .weights import LevelLike, as_level, as_weights, is_free_on_stable

MAX_RETRIES = 4


class PrecisionExhausted(PrecisionError):
    """The residue stayed outside the known window after every retry."""


def euler_characteristic(upper: Iterable[FixedPointDatum]) -> Fraction:
    return -sum((Fraction(1, a) for d in upper for a in d.tangent_weights), Fraction(0))


def chern_restriction_cn1(tangent_weights: Sequence[int]) -> Poly:
    """c_{n-1} of the tangent space at a fixed point: t^{n-1} e_{n-1}(weights)."""
    ws = list(tangent_weights)
    if not ws:
        raise ValueError("need at least one tangent weight")
    n = len(ws)
    e = sum(prod(ws[:i] + ws[i + 1 :]) for i in range(n))
    return Poly.monomial(e, n - 1)


def euler_by_residue(upper: Iterable[FixedPointDatum]) -> Fraction:
    """Same number as :func:`euler_characteristic`, via c_{n-1} / c_n."""
    total = Fraction(0)
    for d in upper:
        r = chern_restriction_cn1(d.tangent_weights).to_series()
        total += residue(r * series_invert(euler_class(d.tangent_weights).to_series()))
    return -total


def todd_series(tangent_weights: Sequence[int], order: int) -> LaurentSeries:
    """1 / prod_i (1 - exp(-a_i t)), each exponential kept to ``order`` terms."""
    denom = LaurentSeries({0: 1})
    for a in tangent_weights:
        denom = denom * (1 - series_exp(-a, order))
    return series_invert(denom)


def todd_local_residue(tangent_weights: Sequence[int], order: Optional[int] = None) -> Fraction:
    n = len(tangent_weights)
    order = n + 2 if order is None else order
    for _ in range(MAX_RETRIES + 1):
        try:
            return residue(todd_series(tangent_weights, order))
        except PrecisionError:
            order += n + 2
    raise PrecisionExhausted(f"residue out of window at order {order} for weights {tuple(tangent_weights)}")


def todd_genus(upper: Iterable[FixedPointDatum], order: Optional[int] = None) -> Fraction:
    upper = list(upper)
    if order is not None:
        for d in upper:
            if order < d.dim + 2:
                raise ValueError(f"order {order} below the required n+2 = {d.dim + 2}")
    return -sum((todd_local_residue(d.tangent_weights, order) for d in upper), Fraction(0))


def todd_closed_form(upper: Iterable[FixedPointDatum]) -> Fraction:
    """-sum_p sum_{i != l} a_l / (2 a_i)."""
    return -sum(
        (Fraction(al, 2 * ai) for d in upper for ai, al in permutations(d.tangent_weights, 2)),
        Fraction(0),
    )


@dataclass(frozen=True)
class ToddComparison:
    series_value: Fraction
    closed_form_value: Fraction
    agree: bool


def todd_closed_form_comparator(upper: Iterable[FixedPointDatum], order: Optional[int] = None) -> ToddComparison:
    upper = list(upper)
    s = todd_genus(upper, order)
    c = todd_closed_form(upper)
    return ToddComparison(s, c, s == c)


@dataclass(frozen=True)
class QuotientNumbers:
    chi: Fraction
    todd: Fraction
    free: bool
    reduced_present: bool

    @property
    def label(self) -> Optional[str]:
        return None if self.free else ORBIFOLD


def quotient_numbers(w, q: LevelLike, order: Optional[int] = None) -> QuotientNumbers:
    """Both characteristic numbers of X^s(q)/T for X = P(V), with the freeness flag."""
    w, q = as_weights(w), as_level(q)
    inv = cut_fixed_inventory(w, q)
    return QuotientNumbers(
        chi=euler_characteristic(inv.upper_fixed),
        todd=todd_genus(inv.upper_fixed, order),
        free=is_free_on_stable(w, q),
        reduced_present=inv.reduced_present,
    )
