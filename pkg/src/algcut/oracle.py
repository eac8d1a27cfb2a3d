"""Brute-force validators built from invariant monomials.

These never consult the weight-set stability criterion; they enumerate
sections of O(d) monomial by monomial and decide (non)vanishing directly,
so they serve as an independent check on :mod:`algcut.weights` and
:mod:`algcut.cut`.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .weights import as_pattern, as_weights


@dataclass(frozen=True)
class MonomialSection:
    """Monomial prod x_i^{m_i} in S^d(V^*); x_i has T-weight -a_i."""

    exponents: tuple[tuple[int, int], ...]  # sorted (index, exponent) pairs
    degree: int
    t_weight: int

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.exponents)

    def nonzero_at(self, pattern) -> bool:
        return self.support <= as_pattern(pattern).indices


def _section(combo: tuple[int, ...], t_weight: int) -> MonomialSection:
    return MonomialSection(tuple(sorted(Counter(combo).items())), len(combo), t_weight)


def _raw_monomials(indices, w, d: int) -> Iterator[tuple[tuple[int, ...], int]]:
    # (index multiset, t_weight) without building section objects
    a = {i: w[i] for i in indices}
    for combo in combinations_with_replacement(sorted(indices), d):
        yield combo, -sum(a[i] for i in combo)


def monomials(indices, w, d: int) -> Iterator[MonomialSection]:
    """Every degree-d monomial in the given coordinate indices."""
    w = as_weights(w)
    for combo, tw in _raw_monomials(indices, w, d):
        yield _section(combo, tw)


def exact_degree_bound(w) -> int:
    """A degree by which every stable support carries an invariant monomial.

    A straddling pair a_i < 0 < a_j gives x_i^{a_j/g} x_j^{-a_i/g} with
    g = gcd(a_i, a_j), of degree (a_j - a_i)/g; every stable support contains
    such a pair, so the largest of these degrees suffices.
    """
    w = as_weights(w)
    neg = {a for a in w if a < 0}
    pos = {a for a in w if a > 0}
    best = 1
    for a in neg:
        for b in pos:
            best = max(best, (b - a) // math.gcd(a, b))
    return best


def invariant_monomial_exists(p, w, d_max: int) -> bool:
    """Is there a T-invariant monomial of degree 1..d_max not vanishing on support p?"""
    w, p = as_weights(w), as_pattern(p)
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    if 0 in w.weights:
        raise ValueError("zero ambient weight: the oracle assumes 0 is not a weight")
    for d in range(1, d_max + 1):
        for _, tw in _raw_monomials(p.indices, w, d):
            if tw == 0:
                return True
    return False


def is_semistable_by_monomials(p, w) -> bool:
    return invariant_monomial_exists(p, w, exact_degree_bound(w))


def _check_unstable_type(p, w, z_is_zero: bool) -> None:
    pi = {w[i] for i in p.indices}
    all_pos = all(a > 0 for a in pi)
    all_neg = all(a < 0 for a in pi)
    if z_is_zero and not (all_pos or all_neg):
        raise ValueError(f"pattern {p} at w=0 is not of type (ii'): weights straddle 0")
    if not z_is_zero and not all_neg:
        raise ValueError(f"pattern {p} at w!=0 is not of type (iii'): a weight is positive")


def nonvanishing_invariant_sections(p, w, z_is_zero: bool, d: int) -> list[MonomialSection]:
    """A-invariant basis sections tau_l (x) w^l of L^d not vanishing at (x, w).

    tau_l runs over degree-d monomials of T-weight -l with l >= 0.  At w = 0
    only l = 0 survives; at w != 0 every l does.
    """
    w, p = as_weights(w), as_pattern(p)
    support = p.indices
    out = []
    for combo, tw in _raw_monomials(range(1, len(w) + 1), w, d):
        l = -tw
        if l < 0 or (z_is_zero and l != 0):
            continue
        if support.issuperset(combo):
            out.append(_section(combo, tw))
    return out


def a_invariant_sections_vanish(p, w, z_is_zero: bool, d: int) -> bool:
    w, p = as_weights(w), as_pattern(p)
    if 0 in w.weights:
        raise ValueError("zero ambient weight")
    if d < 1:
        raise ValueError("d must be >= 1")
    if max(p.indices) > len(w):
        raise IndexError(f"pattern {p} out of range")
    _check_unstable_type(p, w, z_is_zero)
    return not nonvanishing_invariant_sections(p, w, z_is_zero, d)
