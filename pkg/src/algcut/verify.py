"""Seeded property suites behind ``algcut verify``.

Each suite returns a :class:`SuiteResult` with pass/fail counts and the
first few failing cases.  Randomness comes from a seeded ``random.Random``
so a run is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Optional

from .arith import LaurentSeries, Poly, residue, series_exp, series_invert
from .charnum import euler_by_residue, euler_characteristic, todd_genus
from .cut import InstabilityType, Section, classify_cut_point, cut_fixed_inventory, psi_weight_check
from .localization import (
    EquivariantClass,
    kalkman_from_class,
    relation_class_value,
    restrict_at_fixed_point,
    tangent_chern_class,
    total_residue,
)
from .oracle import a_invariant_sections_vanish, exact_degree_bound, invariant_monomial_exists
from .weights import (
    AmbientWeights,
    all_patterns,
    classify,
    is_in_upper,
    is_stable,
    reweight,
)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, case=None) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(case)

    @property
    def ok(self) -> bool:
        return self.failed == 0


# -- generators shared with the test-suite --------------------------------


def random_distinct_weights(rng: random.Random, lo=-9, hi=9, min_len=2, max_len=6) -> AmbientWeights:
    n = rng.randint(min_len, max_len)
    return AmbientWeights(rng.sample(range(lo, hi + 1), n))


def random_rational(rng: random.Random, bound=5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_homogeneous_class(rng: random.Random, w: AmbientWeights, degree: int) -> EquivariantClass:
    terms = {(i, degree - i): random_rational(rng) for i in range(degree + 1)}
    return EquivariantClass.from_terms(w, terms)


def random_series(rng: random.Random, val_range=(-3, 3), length=(1, 6), exact_prob=0.2) -> LaurentSeries:
    v = rng.randint(*val_range)
    k = rng.randint(*length)
    coeffs = {v + j: random_rational(rng) for j in range(k)}
    coeffs[v] = coeffs[v] or Fraction(1)
    if rng.random() < exact_prob:
        return LaurentSeries(coeffs, None)
    return LaurentSeries(coeffs, v + k)


def nonzero_weight_vectors(max_len=4, bound=4) -> Iterable[tuple[int, ...]]:
    """Sorted weight vectors (repeats allowed) with entries in [-bound, bound] minus 0."""
    vals = [a for a in range(-bound, bound + 1) if a != 0]
    for n in range(1, max_len + 1):
        yield from combinations_with_replacement(vals, n)


# -- suites ----------------------------------------------------------------


def suite_arith(rng: random.Random, trials: int = 200) -> SuiteResult:
    res = SuiteResult("exact-arith")
    for _ in range(trials):
        s = random_series(rng, exact_prob=0.0)
        inv = series_invert(s)
        prod = s * inv
        one = LaurentSeries({0: 1}, prod.prec)
        res.record(prod.agrees_with(one) and prod.prec is not None and prod.prec >= 1, ("inverse", s))
        a, b = random_series(rng), random_series(rng)
        try:
            lhs = residue(a + b)
            rhs = residue(a) + residue(b)
        except ArithmeticError:
            continue
        res.record(lhs == rhs, ("linearity", a, b))
    # truncation soundness: short and long computations agree on the short window
    for _ in range(trials // 4):
        ws = [rng.choice([a for a in range(-4, 5) if a]) for _ in range(rng.randint(1, 3))]
        k = rng.randint(len(ws) + 1, len(ws) + 4)
        short = _todd_raw(ws, k)
        long = _todd_raw(ws, k + 5)
        res.record(short.agrees_with(long), ("truncation", ws, k))
    return res


def _todd_raw(ws, order) -> LaurentSeries:
    d = LaurentSeries({0: 1})
    for a in ws:
        d = d * (1 - series_exp(-a, order))
    return series_invert(d)


def suite_weights(rng: random.Random, trials: int = 500) -> SuiteResult:
    res = SuiteResult("weight-model")
    for _ in range(trials):
        w = AmbientWeights([rng.randint(-6, 6) for _ in range(rng.randint(1, 5))])
        q = Fraction(rng.randint(-13, 13), rng.randint(1, 4))
        if q in w.weights:
            continue
        w0 = reweight(w, q)
        for p in all_patterns(len(w)):
            pi = {w[i] for i in p.indices}
            exactly_one = sum([is_stable(p, w, q), all(a > q for a in pi), all(a < q for a in pi)]) == 1
            res.record(exactly_one, ("exhaustive", w, q, p))
            res.record(
                is_stable(p, w, q) == is_stable(p, w0, 0) and is_in_upper(p, w, q) == is_in_upper(p, w0, 0),
                ("reweight", w, q, p),
            )
        # monotonicity: adding an index never destroys stability
        for p in all_patterns(len(w)):
            if not is_stable(p, w, q):
                continue
            for j in range(1, len(w) + 1):
                bigger = type(p)(p.indices | {j})
                res.record(is_stable(bigger, w, q), ("monotone", w, q, p, j))
    return res


def suite_cut(rng: random.Random, trials: int = 200) -> SuiteResult:
    res = SuiteResult("cut-construction")
    for _ in range(trials):
        w = AmbientWeights([rng.choice([a for a in range(-6, 7) if a]) for _ in range(rng.randint(1, 5))])
        for p in all_patterns(len(w)):
            fin = classify_cut_point(p, w, Section.FINITE_NONZERO, affine=True)
            res.record((fin is InstabilityType.STABLE) == is_in_upper(p, w, 0), ("restriction", w, p))
            zero = classify_cut_point(p, w, Section.ZERO_SECTION, affine=True)
            res.record((zero is InstabilityType.STABLE) == is_stable(p, w, 0), ("boundary", w, p))
        N = max(w.weights) + rng.randint(1, 5)
        res.record(psi_weight_check(w, N).zero_free, ("psi", w, N))
        wd = AmbientWeights(rng.sample(range(-6, 7), rng.randint(2, 6)))
        q = Fraction(2 * rng.randint(-7, 6) + 1, 2)
        inv = cut_fixed_inventory(wd, q)
        res.record(len(inv.upper_fixed) == sum(a > q for a in wd), ("inventory", wd, q))
    return res


def suite_localization(rng: random.Random, trials: int = 200) -> SuiteResult:
    res = SuiteResult("localization-engine")
    for _ in range(trials):
        w = random_distinct_weights(rng)
        c = random_homogeneous_class(rng, w, w.dim - 1)
        res.record(total_residue(w, c) == 0, ("global-residue", w, c))
    for _ in range(trials // 2):
        w = random_distinct_weights(rng)
        tc = tangent_chern_class(w)
        for i in range(1, len(w) + 1):
            expected = Poly.const(1)
            for j in range(1, len(w) + 1):
                if j != i:
                    expected = expected * Poly({0: 1, 1: w[j] - w[i]})
            res.record(restrict_at_fixed_point(tc, i) == expected, ("euler-sequence", w, i))
            res.record(relation_class_value(w, i).is_zero(), ("relation", w, i))
        c = random_homogeneous_class(rng, w, rng.randint(0, 3))
        d = random_homogeneous_class(rng, w, rng.randint(0, 3))
        i = rng.randint(1, len(w))
        res.record(
            restrict_at_fixed_point(c * d, i) == restrict_at_fixed_point(c, i) * restrict_at_fixed_point(d, i),
            ("ring-map", w, c, d, i),
        )
    # chamber constancy
    for _ in range(trials // 4):
        w = random_distinct_weights(rng, lo=-5, hi=5)
        ws = sorted(w.weights)
        k = rng.randrange(len(ws) - 1)
        lo, hi = ws[k], ws[k + 1]
        if hi - lo < 1:
            continue
        c = random_homogeneous_class(rng, w, w.dim - 1)
        qs = [lo + Fraction(j, 5) * (hi - lo) for j in range(1, 5)]
        vals = {kalkman_from_class(w, q, c) for q in qs}
        res.record(len(vals) == 1, ("chamber", w, lo, hi))
    return res


def suite_charnum(rng: random.Random, trials: int = 100) -> SuiteResult:
    res = SuiteResult("char-numbers")
    for _ in range(trials):
        w = random_distinct_weights(rng, lo=-6, hi=6, max_len=5)
        q = Fraction(2 * rng.randint(-7, 6) + 1, 2)
        upper = cut_fixed_inventory(w, q).upper_fixed
        res.record(euler_characteristic(upper) == euler_by_residue(upper), ("euler-routes", w, q))
        order = w.dim + 2
        res.record(todd_genus(upper, order) == todd_genus(upper, order + 3), ("todd-order", w, q))
    return res


def suite_oracle(max_len: int = 4, bound: int = 4, d_max: int = 4) -> SuiteResult:
    res = SuiteResult("oracle")
    for ws in nonzero_weight_vectors(max_len, bound):
        w = AmbientWeights(ws)
        d_exact = exact_degree_bound(w)
        for p in all_patterns(len(w)):
            res.record(invariant_monomial_exists(p, w, d_exact) == is_stable(p, w, 0), ("equivalence", ws, p))
            kind = classify(p, w, 0)
            for d in range(1, d_max + 1):
                if kind != "stable":
                    res.record(a_invariant_sections_vanish(p, w, True, d), ("vanish-ii'", ws, p, d))
                if kind == "lower":
                    res.record(a_invariant_sections_vanish(p, w, False, d), ("vanish-iii'", ws, p, d))
    return res


SUITES: dict[str, Callable[[random.Random], SuiteResult]] = {
    "exact-arith": suite_arith,
    "weight-model": suite_weights,
    "cut-construction": suite_cut,
    "localization-engine": suite_localization,
    "char-numbers": suite_charnum,
    "oracle": lambda rng: suite_oracle(),
}


def run_all(seed: int = 0, only: Optional[Iterable[str]] = None) -> list[SuiteResult]:
    names = list(only) if only else list(SUITES)
    return [SUITES[n](random.Random(f"{seed}:{n}")) for n in names]
