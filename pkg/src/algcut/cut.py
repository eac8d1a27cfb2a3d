"""Pattern-level shadow of the algebraic cut X_c = (X x A^1)^s / A.

The cut is never built as a scheme.  What is computed: which points of
X x P^1 (and its affine chart X x A^1) are unstable for the antidiagonal
torus, the T-fixed inventory of X_c, and the weight bookkeeping for the
embedding into P(V (x) A^2_N).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .arith import LaurentSeries, Poly
from .weights import (
    AmbientWeights,
    LevelLike,
    NonRegularLevelError,
    as_level,
    as_weights,
    is_regular_level,
    reweight,
    support_weights,
)


class Section(enum.Enum):
    """Position of z on P^1_1 = P(A^2 with weights 0, 1)."""

    ZERO_SECTION = "zero"  # z = [1:0], i.e. w = 0 in the affine chart
    INFINITY_SECTION = "infinity"  # z = [0:1], outside the affine chart
    FINITE_NONZERO = "finite"


class InstabilityType(enum.Enum):
    STABLE = "stable"
    TYPE_I = "i"
    TYPE_II = "ii"
    TYPE_III = "iii"
    TYPE_II_PRIME = "ii'"
    TYPE_III_PRIME = "iii'"


@dataclass(frozen=True)
class FixedPointDatum:
    """An isolated fixed point: tangent weights and the restriction of a class."""

    label: str
    tangent_weights: tuple[int, ...]
    restriction: Union[Poly, LaurentSeries, None] = None

    def __post_init__(self):
        tw = tuple(self.tangent_weights)
        if not tw:
            raise ValueError(f"{self.label}: tangent weights must be nonempty")
        if any(a == 0 for a in tw):
            raise ValueError(f"{self.label}: zero tangent weight, fixed point is not isolated")
        object.__setattr__(self, "tangent_weights", tw)

    @property
    def dim(self) -> int:
        return len(self.tangent_weights)

    def with_restriction(self, r) -> "FixedPointDatum":
        return FixedPointDatum(self.label, self.tangent_weights, r)


@dataclass(frozen=True)
class CutInventory:
    level: Fraction
    upper_fixed: tuple[FixedPointDatum, ...]
    lower_fixed: tuple[FixedPointDatum, ...]
    reduced_present: bool
    reduced_normal_weight: int = 1
    upper_indices: tuple[int, ...] = field(default=())


def _require_no_zero(w: AmbientWeights) -> None:
    if 0 in w.weights:
        raise ValueError("zero ambient weight: reweight to a regular level first")


def classify_cut_point(p, w, z: Section, affine: bool = False) -> InstabilityType:
    """Stability of (x, z) in X x P^1 for the antidiagonal torus, cut at 0.

    With ``affine=True`` the point is read in the chart X x A^1 and the
    primed labels are used; the infinity section is not in that chart.
    """
    w = as_weights(w)
    _require_no_zero(w)
    pi = support_weights(p, w)
    all_pos = all(a > 0 for a in pi)
    all_neg = all(a < 0 for a in pi)
    if z is Section.INFINITY_SECTION:
        if affine:
            raise ValueError("the infinity section lies outside X x A^1")
        return InstabilityType.TYPE_I
    if z is Section.ZERO_SECTION:
        if all_pos or all_neg:
            return InstabilityType.TYPE_II_PRIME if affine else InstabilityType.TYPE_II
        return InstabilityType.STABLE
    if all_neg:
        return InstabilityType.TYPE_III_PRIME if affine else InstabilityType.TYPE_III
    return InstabilityType.STABLE


def coordinate_fixed_point(w, i: int) -> FixedPointDatum:
    w = as_weights(w)
    ai = w[i]
    tw = tuple(w[j] - ai for j in range(1, len(w) + 1) if j != i)
    return FixedPointDatum(f"e{i}", tw)


def cut_fixed_inventory(w, q: LevelLike = 0) -> CutInventory:
    w, q = as_weights(w), as_level(q)
    w.require_distinct()
    if len(w) < 2:
        raise ValueError("P(V) must have positive dimension")
    if not is_regular_level(w, q):
        raise NonRegularLevelError(f"level {q} is an ambient weight")
    n = len(w)
    upper_idx = tuple(i for i in range(1, n + 1) if w[i] > q)
    lower_idx = tuple(i for i in range(1, n + 1) if w[i] < q)
    return CutInventory(
        level=q,
        upper_fixed=tuple(coordinate_fixed_point(w, i) for i in upper_idx),
        lower_fixed=tuple(coordinate_fixed_point(w, i) for i in lower_idx),
        reduced_present=bool(upper_idx) and bool(lower_idx),
        upper_indices=upper_idx,
    )


@dataclass(frozen=True)
class PsiWeights:
    diagonal_weights: Counter
    antidiagonal_weights: Counter
    zero_free: bool


def psi_weight_check(w, N: int, q: Optional[LevelLike] = None) -> PsiWeights:
    """Weights of T_diag and A on V (x) A^2_N for the map into P(V (x) A^2_N)."""
    w = as_weights(w)
    if q is not None:
        w = reweight(w, q)
    _require_no_zero(w)
    if N <= max(w.weights):
        raise ValueError(f"N={N} must exceed every weight (max {max(w.weights)})")
    diag = Counter(w.weights) + Counter(a + N for a in w.weights)
    anti = Counter(w.weights) + Counter(a - N for a in w.weights)
    return PsiWeights(diag, anti, anti[0] == 0)
