"""Exact arithmetic in one variable ``t``.

Rationals are :class:`fractions.Fraction`.  :class:`Poly` is an exact
polynomial in ``t``; :class:`LaurentSeries` is a Laurent series known on a
window ``[valuation, prec)``.  Coefficients at exponents ``>= prec`` are
*unknown*, not zero, and every operation propagates the tightest window it
can certify.  ``prec=None`` marks an exact (finite) Laurent polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

__all__ = [
    "Fraction",
    "Poly",
    "LaurentSeries",
    "PrecisionError",
    "as_fraction",
    "format_rational",
    "parse_rational",
    "series_exp",
    "series_invert",
    "laurent_arith",
    "residue",
]

Number = Union[int, Fraction]


class PrecisionError(ArithmeticError):
    """A requested coefficient lies outside the known truncation window."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact or boolean value {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; decimals and floats are rejected."""
    s = text.strip()
    if not s or any(c in s for c in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(x: Number) -> str:
    # Fraction normalizes to lowest terms with a positive denominator.
    return str(Fraction(x))


def _clean(coeffs: Mapping[int, Number]) -> dict[int, Fraction]:
    out = {}
    for k, c in coeffs.items():
        c = as_fraction(c)
        if c:
            out[int(k)] = c
    return out


class Poly:
    """Polynomial in ``t`` with rational coefficients, stored sparsely."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Union[Mapping[int, Number], Iterable[Number], None] = None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        c = _clean(coeffs)
        if any(k < 0 for k in c):
            raise ValueError("Poly exponents must be nonnegative")
        self._c = c

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Number, k: int) -> "Poly":
        return cls({k: c})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def coefficient(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    def degree(self) -> Optional[int]:
        return max(self._c) if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return Poly(c)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        c: dict[int, Fraction] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                c[i + j] = c.get(i + j, 0) + a * b
        return Poly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        try:
            other = _as_poly(other)
        except TypeError:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def to_series(self) -> "LaurentSeries":
        return LaurentSeries(self._c, prec=None)

    def __repr__(self) -> str:
        return f"Poly({_render(self._c)})"


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Poly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def _render(c: Mapping[int, Fraction]) -> str:
    if not c:
        return "0"
    parts = []
    for k in sorted(c):
        v = format_rational(c[k])
        parts.append(v if k == 0 else f"{v}*t^{k}")
    return " + ".join(parts)


class LaurentSeries:
    """Truncated Laurent series ``sum c_k t^k`` known for ``k < prec``.

    ``valuation`` is the lowest exponent with a nonzero known coefficient;
    for a series that is zero on its whole window it equals ``prec``.
    """

    __slots__ = ("_c", "prec")

    def __init__(self, coeffs: Mapping[int, Number], prec: Optional[int] = None):
        c = _clean(coeffs)
        if prec is not None:
            c = {k: v for k, v in c.items() if k < prec}
        self._c = c
        self.prec = prec

    @classmethod
    def monomial(cls, c: Number, k: int) -> "LaurentSeries":
        return cls({k: c})

    @property
    def exact(self) -> bool:
        return self.prec is None

    @property
    def valuation(self) -> Optional[int]:
        """Lowest known nonzero exponent; ``prec`` if none; ``None`` for exact zero."""
        if self._c:
            return min(self._c)
        return self.prec

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def coefficient(self, k: int) -> Fraction:
        if self.prec is not None and k >= self.prec:
            raise PrecisionError(f"coefficient of t^{k} unknown (series known below t^{self.prec})")
        return self._c.get(k, Fraction(0))

    def truncate(self, prec: int) -> "LaurentSeries":
        if self.prec is not None and prec > self.prec:
            raise PrecisionError("cannot raise the truncation order")
        return LaurentSeries(self._c, prec)

    def __add__(self, other) -> "LaurentSeries":
        return laurent_arith(self, _as_series(other), "add")

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries({k: -v for k, v in self._c.items()}, self.prec)

    def __sub__(self, other) -> "LaurentSeries":
        return self + (-_as_series(other))

    def __rsub__(self, other) -> "LaurentSeries":
        return _as_series(other) - self

    def __mul__(self, other) -> "LaurentSeries":
        return laurent_arith(self, _as_series(other), "mul")

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LaurentSeries":
        return self * series_invert(_as_series(other))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._c == other._c and self.prec == other.prec

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """True if both series have the same coefficients on their common window."""
        bound = _min_prec(self.prec, other.prec)
        keys = set(self._c) | set(other._c)
        if bound is not None:
            keys = {k for k in keys if k < bound}
        return all(self._c.get(k, 0) == other._c.get(k, 0) for k in keys)

    def __repr__(self) -> str:
        tail = "" if self.prec is None else f" + O(t^{self.prec})"
        return f"LaurentSeries({_render(self._c)}{tail})"


def _as_series(x) -> LaurentSeries:
    if isinstance(x, LaurentSeries):
        return x
    if isinstance(x, Poly):
        return x.to_series()
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return LaurentSeries({0: x})
    raise TypeError(f"cannot use {type(x).__name__} as a series")


def _min_prec(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _shift(p: Optional[int], v: Optional[int]) -> Optional[int]:
    # prec of one factor shifted by the valuation of the other
    if p is None:
        return None
    return p + v


def series_exp(c: Number, order: int) -> LaurentSeries:
    """``exp(c t)`` truncated to ``order`` terms."""
    if order < 1:
        raise ValueError("order must be >= 1")
    c = as_fraction(c)
    coeffs = {}
    term = Fraction(1)
    for k in range(order):
        coeffs[k] = term
        term = term * c / (k + 1)
    return LaurentSeries(coeffs, prec=order)


def laurent_arith(a: LaurentSeries, b: LaurentSeries, op: str) -> LaurentSeries:
    if op == "add":
        prec = _min_prec(a.prec, b.prec)
        c = dict(a._c)
        for k, v in b._c.items():
            c[k] = c.get(k, 0) + v
        return LaurentSeries(c, prec)
    if op != "mul":
        raise ValueError(f"unknown operation {op!r}")
    va, vb = a.valuation, b.valuation
    if va is None or vb is None:
        # an exact zero annihilates everything, including unknown tails
        return LaurentSeries({}, None)
    prec = _min_prec(_shift(a.prec, vb), _shift(b.prec, va))
    c: dict[int, Fraction] = {}
    for i, x in a._c.items():
        for j, y in b._c.items():
            k = i + j
            if prec is None or k < prec:
                c[k] = c.get(k, 0) + x * y
    return LaurentSeries(c, prec)


def series_invert(s: LaurentSeries, terms: Optional[int] = None) -> LaurentSeries:
    """Multiplicative inverse.

    A truncated input keeps its relative precision.  For an exact input that
    is not a monomial the inverse is infinite, so ``terms`` (the number of
    coefficients to produce) is required.
    """
    s = _as_series(s)
    if not s._c:
        raise ZeroDivisionError("series is zero on its known window; not invertible")
    v = min(s._c)
    if s.prec is None:
        if len(s._c) == 1:
            return LaurentSeries({-v: 1 / s._c[v]}, None)
        if terms is None:
            raise ValueError("inverting an exact non-monomial needs an explicit number of terms")
        rel = terms
    else:
        rel = s.prec - v
        if terms is not None:
            rel = min(rel, terms)
    lead = s._c[v]
    # s = lead * t^v * (1 + u); solve the normalized recurrence
    u = [s._c.get(v + k, Fraction(0)) / lead for k in range(rel)]
    inv = [Fraction(0)] * rel
    inv[0] = Fraction(1)
    for k in range(1, rel):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if u[j]:
                acc += u[j] * inv[k - j]
        inv[k] = -acc
    return LaurentSeries({k - v: x / lead for k, x in enumerate(inv)}, prec=rel - v)


def residue(s: Union[LaurentSeries, Poly]) -> Fraction:
    """Coefficient of ``t^{-1}``."""
    s = _as_series(s)
    if s.prec is not None and s.prec <= -1:
        raise PrecisionError(f"residue needs the t^-1 coefficient, series known only below t^{s.prec}")
    return s._c.get(-1, Fraction(0))
