"""Equivariant classes on P(V) and residue localization at t = 0.

Conventions: a one-dimensional representation of weight a has equivariant
first Chern class a*t.  The fibre of O(1) at the coordinate point e_i is
dual to the tautological line (weight a_i), so the hyperplane class h
restricts to -a_i*t there, and the equivariant Chow ring of P(V) is
Q[h, t] / prod_i (h + a_i t).  Tangent weights at e_i are a_j - a_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Iterable, Mapping, Optional, Sequence, Union

from .arith import LaurentSeries, Poly, residue, series_invert
from .cut import FixedPointDatum, coordinate_fixed_point, cut_fixed_inventory
from .weights import AmbientWeights, LevelLike, as_level, as_weights, is_free_on_stable


class DegreeError(ValueError):
    """A class has the wrong (or no single) homogeneous degree."""


def _elementary(values: Sequence[int], k: int) -> int:
    return sum(prod(c) for c in combinations(values, k))


class EquivariantClass:
    """Element of Q[h, t] / prod_i (h + a_i t), kept reduced (h-degree < |w|).

    Stored as ``{h_exponent: Poly in t}``.
    """

    __slots__ = ("weights", "_c")

    def __init__(self, weights, coeffs: Optional[Mapping[int, Poly]] = None):
        self.weights = as_weights(weights)
        self._c = self._reduce(dict(coeffs or {}))

    # -- construction -------------------------------------------------
    @classmethod
    def from_terms(cls, weights, terms: Mapping[tuple[int, int], object]) -> "EquivariantClass":
        """``terms`` maps ``(h_exponent, t_exponent)`` to a rational coefficient."""
        c: dict[int, Poly] = {}
        for (i, j), v in terms.items():
            c[i] = c.get(i, Poly()) + Poly.monomial(v, j)
        return cls(weights, c)

    @classmethod
    def one(cls, weights) -> "EquivariantClass":
        return cls(weights, {0: Poly.const(1)})

    @classmethod
    def h(cls, weights) -> "EquivariantClass":
        return cls(weights, {1: Poly.const(1)})

    @classmethod
    def t(cls, weights) -> "EquivariantClass":
        return cls(weights, {0: Poly.monomial(1, 1)})

    @classmethod
    def constant(cls, weights, c) -> "EquivariantClass":
        return cls(weights, {0: Poly.const(c)})

    def _relation_tail(self) -> dict[int, Poly]:
        # prod (h + a_i t) = h^m + sum_k e_{m-k}(a) t^{m-k} h^k
        a = self.weights.weights
        m = len(a)
        return {k: Poly.monomial(_elementary(a, m - k), m - k) for k in range(m)}

    def _reduce(self, c: dict[int, Poly]) -> dict[int, Poly]:
        m = len(self.weights)
        c = {k: v for k, v in c.items() if not v.is_zero()}
        if c and max(c) >= m:
            tail = self._relation_tail()
            while c and max(c) >= m:
                d = max(c)
                lead = c.pop(d)
                for k, r in tail.items():
                    e = d - m + k
                    c[e] = c.get(e, Poly()) - lead * r
                c = {k: v for k, v in c.items() if not v.is_zero()}
        return c

    # -- arithmetic ---------------------------------------------------
    def _check(self, other) -> "EquivariantClass":
        if isinstance(other, (int, Fraction, Poly)) and not isinstance(other, bool):
            p = other if isinstance(other, Poly) else Poly.const(other)
            return EquivariantClass(self.weights, {0: p})
        if not isinstance(other, EquivariantClass):
            raise TypeError(f"cannot combine EquivariantClass with {type(other).__name__}")
        if other.weights != self.weights:
            raise ValueError("classes live on different P(V) actions")
        return other

    def __add__(self, other) -> "EquivariantClass":
        other = self._check(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, Poly()) + v
        return EquivariantClass(self.weights, c)

    __radd__ = __add__

    def __neg__(self) -> "EquivariantClass":
        return EquivariantClass(self.weights, {k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> "EquivariantClass":
        return self + (-self._check(other))

    def __rsub__(self, other) -> "EquivariantClass":
        return self._check(other) - self

    def __mul__(self, other) -> "EquivariantClass":
        other = self._check(other)
        c: dict[int, Poly] = {}
        for i, x in self._c.items():
            for j, y in other._c.items():
                c[i + j] = c.get(i + j, Poly()) + x * y
        return EquivariantClass(self.weights, c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "EquivariantClass":
        out = EquivariantClass.one(self.weights)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, EquivariantClass):
            return NotImplemented
        return self.weights == other.weights and self._c == other._c

    def __hash__(self):
        return hash((self.weights, frozenset(self._c.items())))

    # -- queries ------------------------------------------------------
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return {(i, j): v for i, p in self._c.items() for j, v in p.coeffs.items()}

    def is_zero(self) -> bool:
        return not self._c

    def degrees(self) -> set[int]:
        return {i + j for (i, j) in self.terms()}

    def homogeneous_degree(self) -> Optional[int]:
        """The single total degree in (h, t); None for zero; DegreeError if mixed."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise DegreeError(f"class is not homogeneous (degrees {sorted(ds)})")
        return ds.pop()

    def part(self, degree: int) -> "EquivariantClass":
        return EquivariantClass.from_terms(
            self.weights, {k: v for k, v in self.terms().items() if sum(k) == degree}
        )

    def restrict(self, i: int) -> Poly:
        return restrict_at_fixed_point(self, i)

    def __repr__(self) -> str:
        if not self._c:
            return "EquivariantClass(0)"
        parts = []
        for (i, j), v in sorted(self.terms().items()):
            mono = "*".join(s for s in (f"h^{i}" if i else "", f"t^{j}" if j else "") if s)
            parts.append(f"{v}*{mono}" if mono else f"{v}")
        return f"EquivariantClass({' + '.join(parts)})"


def restrict_at_fixed_point(c: EquivariantClass, i: int, w=None) -> Poly:
    """Restriction to e_i: substitute h -> -a_i t."""
    w = c.weights if w is None else as_weights(w)
    if w != c.weights:
        raise ValueError("weights do not match the class")
    w.require_distinct()
    hval = Poly.monomial(-w[i], 1)
    out = Poly()
    for k, p in c._c.items():
        out = out + p * hval**k
    return out


def relation_class_value(w, i: int) -> Poly:
    """The defining relation prod_j (h + a_j t) evaluated at e_i (unreduced)."""
    w = as_weights(w)
    out = Poly.const(1)
    for a in w:
        out = out * Poly({1: a - w[i]})
    return out


def tangent_chern_class(w) -> EquivariantClass:
    """Total equivariant Chern class prod_j (1 + h + a_j t) of T P(V)."""
    w = as_weights(w)
    w.require_distinct()
    out = EquivariantClass.one(w)
    for a in w:
        out = out * EquivariantClass.from_terms(w, {(0, 0): 1, (1, 0): 1, (0, 1): a})
    return out


def euler_class(tangent_weights: Iterable[int]) -> Poly:
    ws = list(tangent_weights)
    if any(a == 0 for a in ws):
        raise ValueError("zero tangent weight: fixed point is not isolated")
    return Poly.monomial(prod(ws), len(ws))


def _as_series(r) -> LaurentSeries:
    if r is None:
        raise ValueError("fixed-point datum carries no restriction")
    if isinstance(r, LaurentSeries):
        return r
    if isinstance(r, Poly):
        return r.to_series()
    return Poly.const(r).to_series()


def local_term(datum: FixedPointDatum) -> Fraction:
    """Res_{t=0} of restriction / euler class at one fixed point."""
    e = euler_class(datum.tangent_weights).to_series()
    return residue(_as_series(datum.restriction) * series_invert(e))


def kalkman_integral(upper: Iterable[FixedPointDatum]) -> Fraction:
    """Degree over the quotient: minus the sum of local residues above the level."""
    return -sum((local_term(d) for d in upper), Fraction(0))


@dataclass(frozen=True)
class KalkmanReport:
    value: Fraction
    reduced_present: bool
    free: bool
    terms: tuple[tuple[str, Fraction], ...]
    warnings: tuple[str, ...] = field(default=())


EMPTY_QUOTIENT = "empty quotient: no stable points at this level"
ORBIFOLD = "orbifold (non-free action; rational-coefficient value)"


def _upper_data(w: AmbientWeights, q, c: EquivariantClass):
    inv = cut_fixed_inventory(w, q)
    data = [
        d.with_restriction(restrict_at_fixed_point(c, i))
        for d, i in zip(inv.upper_fixed, inv.upper_indices)
    ]
    return inv, data


def kalkman_report(w, q: LevelLike, c: EquivariantClass) -> KalkmanReport:
    w, q = as_weights(w), as_level(q)
    if c.weights != w:
        raise ValueError("class was built for a different weight vector")
    deg = c.homogeneous_degree()
    if deg is not None and deg != w.dim - 1:
        raise DegreeError(f"class has degree {deg}, expected {w.dim - 1}")
    inv, data = _upper_data(w, q, c)
    terms = tuple((d.label, local_term(d)) for d in data)
    value = -sum((v for _, v in terms), Fraction(0))
    warnings = []
    if not inv.reduced_present:
        warnings.append(EMPTY_QUOTIENT)
    free = is_free_on_stable(w, q)
    if inv.reduced_present and not free:
        warnings.append(ORBIFOLD)
    return KalkmanReport(value, inv.reduced_present, free, terms, tuple(warnings))


def kalkman_from_class(w, q: LevelLike, c: EquivariantClass) -> Fraction:
    return kalkman_report(w, q, c).value


def total_residue(w, c: EquivariantClass) -> Fraction:
    """Sum of local residues over every fixed point of P(V); always zero."""
    w = as_weights(w)
    w.require_distinct()
    deg = c.homogeneous_degree()
    if deg is not None and deg != w.dim - 1:
        raise DegreeError(f"class has degree {deg}, expected {w.dim - 1}")
    total = Fraction(0)
    for i in range(1, len(w) + 1):
        d = coordinate_fixed_point(w, i).with_restriction(restrict_at_fixed_point(c, i))
        total += local_term(d)
    return total


def constant_term_reduction(s: Union[Poly, LaurentSeries]) -> Fraction:
    """t^0 coefficient: forgetting the equivariant parameter."""
    return s.coefficient(0)
