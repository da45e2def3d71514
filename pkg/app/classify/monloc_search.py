"""
Bounded search on the localized polynomial ring k[x,y]_(x,y).

Candidates are polynomials with coefficients in {0, 1}, at most
``max_terms`` terms and total degree <= ``degree``. With nonnegative
coefficients nothing cancels, so the support of a product is the sumset of
the supports and membership in a monomial ideal is decided monomial by
monomial.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional

from app.classify.scan import SearchSpace
from app.config import settings
from app.ideals import monomial as mono
from app.ideals.ideal import Ideal
from app.rings import poly as P
from app.rings.handles import Element


@dataclass(frozen=True)
class SearchBounds:
    degree: int
    max_terms: int

    @classmethod
    def from_settings(cls) -> "SearchBounds":
        return cls(settings.MONLOC_DEGREE_BOUND, settings.MONLOC_MAX_TERMS)

    def describe(self) -> str:
        return f"degree {self.degree}"


class MonomialSpace(SearchSpace):
    """Candidates of the bounded search, units included, monomials first."""

    def __init__(self, ideal: Ideal, bounds: SearchBounds):
        self.ideal = ideal
        self.ring = ideal.ring
        self.bounds = bounds
        self.gens = ideal.payload
        self.radical_gens = mono.radical(self.gens)
        self.supports: List[FrozenSet[P.Monomial]] = P.candidate_supports(
            bounds.degree, bounds.max_terms, include_units=True
        )
        self.monomials = P.monomials_up_to(bounds.degree, include_one=True)
        self.size = len(self.supports)
        self.everything = (1 << self.size) - 1

        self._member: Dict[P.Monomial, bool] = {}
        self._radical_member: Dict[P.Monomial, bool] = {}
        self.in_ideal = self._mask(lambda s: self._contains(s))
        self.in_radical = self._mask(lambda s: self._radical_contains(s))
        self.nonunits = self._mask(lambda s: P.ONE not in s)
        # candidates whose support uses a given monomial
        self._using = {m: self._mask(lambda s, m=m: m in s) for m in self.monomials}
        self._pair_ideal: Dict[int, int] = {}
        self._pair_radical: Dict[int, int] = {}
        self._triple: Dict[FrozenSet[P.Monomial], int] = {}

    def _mask(self, predicate) -> int:
        mask = 0
        for i, s in enumerate(self.supports):
            if predicate(s):
                mask |= 1 << i
        return mask

    def _in(self, m: P.Monomial) -> bool:
        hit = self._member.get(m)
        if hit is None:
            hit = self._member[m] = mono.member(self.gens, m)
        return hit

    def _in_radical(self, m: P.Monomial) -> bool:
        hit = self._radical_member.get(m)
        if hit is None:
            hit = self._radical_member[m] = mono.member(self.radical_gens, m)
        return hit

    def _contains(self, support) -> bool:
        return all(self._in(m) for m in support)

    def _radical_contains(self, support) -> bool:
        return all(self._in_radical(m) for m in support)

    def pair_in_ideal(self, i: int) -> int:
        mask = self._pair_ideal.get(i)
        if mask is None:
            s = self.supports[i]
            mask = self._mask(lambda t: self._contains(P.minkowski(s, t)))
            self._pair_ideal[i] = mask
        return mask

    def pair_in_radical(self, i: int) -> int:
        mask = self._pair_radical.get(i)
        if mask is None:
            s = self.supports[i]
            mask = self._mask(lambda t: self._radical_contains(P.minkowski(s, t)))
            self._pair_radical[i] = mask
        return mask

    def triple_in_ideal(self, i: int, j: int) -> int:
        prod = P.minkowski(self.supports[i], self.supports[j])
        mask = self._triple.get(prod)
        if mask is None:
            # a candidate works iff each of its monomials shifts prod into the ideal
            bad = 0
            for m in self.monomials:
                if not all(self._in((m[0] + a, m[1] + b)) for a, b in prod):
                    bad |= self._using[m]
            mask = self._triple[prod] = self.everything & ~bad
        return mask

    def element(self, i: int, nonunit: bool = False) -> Element:
        return self.ring.element(P.poly_from_support(self.supports[i]))

    def describe(self) -> str:
        return self.bounds.describe()


def monomial_element(ideal: Ideal, m: P.Monomial) -> Element:
    return ideal.ring.element(P.poly_from_support([m]))


def prime_fallback(ideal: Ideal) -> Optional[tuple]:
    """Split a generator of degree >= 2 into two factors outside the ideal."""
    for g in sorted(ideal.payload, key=P.monomial_key):
        if P.monomial_degree(g) >= 2:
            v = (1, 0) if g[0] else (0, 1)
            rest = (g[0] - v[0], g[1] - v[1])
            return monomial_element(ideal, v), monomial_element(ideal, rest)
    return None


def primary_fallback(ideal: Ideal) -> Optional[tuple]:
    """``(g / v, v)`` for a variable ``v`` of a generator ``g`` with no pure power of ``v``."""
    gens = ideal.payload
    for idx, var in enumerate(((1, 0), (0, 1))):
        has_pure = any(g[idx] > 0 and g[1 - idx] == 0 for g in gens)
        if has_pure:
            continue
        for g in sorted(gens, key=P.monomial_key):
            if g[idx] > 0:
                rest = (g[0] - var[0], g[1] - var[1])
                return monomial_element(ideal, rest), monomial_element(ideal, var)
    return None


def one_absorbing_fallback(ideal: Ideal) -> Optional[tuple]:
    """Witness ``(x, x^a, y^b)`` when the radical is ``(xy)`` and ``x^a y^b`` generates."""
    if mono.radical(ideal.payload) != frozenset({(1, 1)}):
        return None
    a, b = min(ideal.payload, key=P.monomial_key)
    return (
        monomial_element(ideal, (1, 0)),
        monomial_element(ideal, (a, 0)),
        monomial_element(ideal, (0, b)),
    )


def is_prime_times_maximal(ideal: Ideal) -> bool:
    """Whether the ideal equals P M for a monomial prime P."""
    maximal = frozenset({(1, 0), (0, 1)})
    primes = [frozenset({(1, 0)}), frozenset({(0, 1)}), maximal, mono.ZERO]
    return any(mono.product(p, maximal) == ideal.payload for p in primes)
