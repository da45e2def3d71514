"""
Monomial ideal arithmetic in two variables.

A monomial ideal is stored as its minimal generating set, a frozenset of
exponent pairs. The whole ring is ``{(0, 0)}`` and the zero ideal is empty.
"""

from typing import FrozenSet, Iterable, List

from app.rings.poly import ONE, Monomial, divides, monomial_key, monomials_up_to

Generators = FrozenSet[Monomial]

WHOLE: Generators = frozenset({ONE})
ZERO: Generators = frozenset()


def minimalize(monomials: Iterable[Monomial]) -> Generators:
    """Drop every monomial divisible by another one in the set."""
    pool = sorted(set(monomials), key=monomial_key)
    kept: List[Monomial] = []
    for m in pool:
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return frozenset(kept)


def member(gens: Generators, m: Monomial) -> bool:
    return any(divides(g, m) for g in gens)


def contains_support(gens: Generators, support: Iterable[Monomial]) -> bool:
    """A polynomial lies in the ideal iff each of its monomials does."""
    return all(member(gens, m) for m in support)


def radical(gens: Generators) -> Generators:
    return minimalize((min(a, 1), min(b, 1)) for a, b in gens)


def product(left: Generators, right: Generators) -> Generators:
    return minimalize((a[0] + b[0], a[1] + b[1]) for a in left for b in right)


def intersect(left: Generators, right: Generators) -> Generators:
    return minimalize((max(a[0], b[0]), max(a[1], b[1])) for a in left for b in right)


def add(left: Generators, right: Generators) -> Generators:
    return minimalize(left | right)


def power(gens: Generators, n: int) -> Generators:
    result = WHOLE
    for _ in range(n):
        result = product(result, gens)
    return result


def colon(gens: Generators, mu: Monomial) -> Generators:
    """Quotient ``(I : x^a y^b)``: each generator divided by its gcd with the monomial."""
    return minimalize((max(g[0] - mu[0], 0), max(g[1] - mu[1], 0)) for g in gens)


def is_subset(small: Generators, big: Generators) -> bool:
    return all(member(big, g) for g in small)


def is_generated_by_variables(gens: Generators) -> bool:
    return all(g in ((1, 0), (0, 1)) for g in gens)


def has_pure_powers(gens: Generators) -> bool:
    """Each variable occurring in a generator also has a pure power among them."""
    pure_x = any(b == 0 and a > 0 for a, b in gens)
    pure_y = any(a == 0 and b > 0 for a, b in gens)
    uses_x = any(a > 0 for a, _ in gens)
    uses_y = any(b > 0 for _, b in gens)
    return (pure_x or not uses_x) and (pure_y or not uses_y)


def antichains(degree: int) -> List[Generators]:
    """All nonempty minimal generating sets of nonconstant monomials of degree <= ``degree``."""
    # sorted by descending x-exponent, an antichain has strictly increasing y-exponents
    monos = sorted(monomials_up_to(degree), key=lambda m: (-m[0], m[1]))
    result: List[Generators] = []

    def extend(start: int, chosen: List[Monomial]) -> None:
        for i in range(start, len(monos)):
            m = monos[i]
            if chosen and (m[0] >= chosen[-1][0] or m[1] <= chosen[-1][1]):
                continue
            chosen.append(m)
            result.append(frozenset(chosen))
            extend(i + 1, chosen)
            chosen.pop()

    extend(0, [])
    return result


def sort_key(gens: Generators):
    return (len(gens), sorted(monomial_key(g) for g in gens))
