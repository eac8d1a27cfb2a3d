"""Weights of a linearized one-dimensional torus action on P(V).

A point of P(V) is represented only by its support (the set of nonzero
coordinates); every predicate here depends on the point through its weight
set alone.  Indices are 1-based throughout, matching the basis v_1..v_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Iterable, Iterator, Union

from .arith import as_fraction

INFINITE = math.inf

LevelLike = Union[int, str, Fraction]


class NonRegularLevelError(ValueError):
    """The cutting level coincides with an ambient weight."""


class RepeatedWeightError(ValueError):
    """Repeated ambient weights: the fixed locus is not isolated."""


@dataclass(frozen=True)
class AmbientWeights:
    weights: tuple[int, ...]

    def __init__(self, weights: Iterable[int]):
        ws = tuple(weights)
        if not ws:
            raise ValueError("AmbientWeights must be nonempty")
        for a in ws:
            if isinstance(a, bool) or not isinstance(a, int):
                raise TypeError(f"weights must be integers, got {a!r}")
        object.__setattr__(self, "weights", ws)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i: int) -> int:
        """1-based access."""
        return self.weights[i - 1]

    @property
    def dim(self) -> int:
        """Dimension of P(V)."""
        return len(self.weights) - 1

    def is_distinct(self) -> bool:
        return len(set(self.weights)) == len(self.weights)

    def require_distinct(self) -> None:
        if not self.is_distinct():
            raise RepeatedWeightError(
                f"weights {self.weights} repeat; positive-dimensional fixed components are unsupported"
            )


@dataclass(frozen=True)
class SupportPattern:
    indices: frozenset[int]

    def __init__(self, indices: Iterable[int]):
        idx = frozenset(int(i) for i in indices)
        if not idx:
            raise ValueError("a point of P(V) has at least one nonzero coordinate")
        if min(idx) < 1:
            raise ValueError("support indices are 1-based")
        object.__setattr__(self, "indices", idx)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.indices)) + "}"


def as_weights(w) -> AmbientWeights:
    return w if isinstance(w, AmbientWeights) else AmbientWeights(w)


def as_pattern(p) -> SupportPattern:
    return p if isinstance(p, SupportPattern) else SupportPattern(p)


def as_level(q: LevelLike) -> Fraction:
    return as_fraction(q)


def all_patterns(n: int) -> Iterator[SupportPattern]:
    """All 2^n - 1 nonempty supports, ordered by size then lexicographically."""
    for k in range(1, n + 1):
        for combo in combinations(range(1, n + 1), k):
            yield SupportPattern(combo)


def support_weights(p, w) -> frozenset[int]:
    p, w = as_pattern(p), as_weights(w)
    if max(p.indices) > len(w):
        raise IndexError(f"pattern {p} out of range for {len(w)} weights")
    return frozenset(w[i] for i in p.indices)


def is_regular_level(w, q: LevelLike) -> bool:
    q = as_level(q)
    return all(a != q for a in as_weights(w))


def _require_regular(w, q: Fraction) -> None:
    if not is_regular_level(w, q):
        raise NonRegularLevelError(f"level {q} is an ambient weight")


def is_stable(p, w, q: LevelLike = 0) -> bool:
    q = as_level(q)
    _require_regular(w, q)
    pi = support_weights(p, w)
    return any(a > q for a in pi) and any(a < q for a in pi)


def is_in_upper(p, w, q: LevelLike = 0) -> bool:
    q = as_level(q)
    return any(a > q for a in support_weights(p, w))


def is_in_lower(p, w, q: LevelLike = 0) -> bool:
    q = as_level(q)
    return any(a < q for a in support_weights(p, w))


def classify(p, w, q: LevelLike = 0) -> str:
    """``"stable"``, ``"upper"`` (all weights > q) or ``"lower"`` (all < q)."""
    if is_stable(p, w, q):
        return "stable"
    return "upper" if is_in_upper(p, w, q) else "lower"


def reweight(w, q: LevelLike) -> AmbientWeights:
    """Weights of the Veronese-twisted action: a_i -> n*a_i - a for q = a/n.

    Cutting the original action at q is the same as cutting the twisted one
    at 0, because sign(a_i - q) = sign(n*a_i - a).
    """
    q = as_level(q)
    a, n = q.numerator, q.denominator
    return AmbientWeights(n * x - a for x in as_weights(w))


def stabilizer_order(p, w) -> Union[int, float]:
    """Order of the generic stabilizer of points with support p.

    Returns ``INFINITE`` for fixed points (singleton weight set).
    """
    pi = sorted(support_weights(p, w))
    if len(pi) == 1:
        return INFINITE
    return reduce(math.gcd, (b - a for a, b in combinations(pi, 2)))


def is_free_on_stable(w, q: LevelLike) -> bool:
    w, q = as_weights(w), as_level(q)
    _require_regular(w, q)
    return all(
        stabilizer_order(p, w) == 1 for p in all_patterns(len(w)) if is_stable(p, w, q)
    )
