"""
Bounded ideal families used as instance generators.
"""

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Tuple

from app.errors import ScopeError
from app.ideals import monomial as mono
from app.ideals.ideal import Ideal, whole_ring, zero_ideal
from app.rings.factor import divisors
from app.rings.handles import Backend, RingHandle


@dataclass(frozen=True)
class IdealFamily:
    """A ring plus the bounds that make its ideal set finite.

    ``modulus_range`` bounds the generators of ideals of Z and Z[1/s] (also
    inside products), ``exponent_max`` the ideals p^k of Z_(p) and
    ``degree`` the generator degree of monomial ideals.
    """

    ring: RingHandle
    modulus_range: Optional[Tuple[int, int]] = None
    exponent_max: Optional[int] = None
    degree: Optional[int] = None


def enumerate_ideals(family: IdealFamily) -> List[Ideal]:
    """All ideals of the family, duplicate-free and sorted canonically.

    Raises:
        ScopeError: when an infinite backend is requested without bounds
    """
    ring = family.ring
    backend = ring.backend
    if backend == Backend.ZMOD:
        return [Ideal(ring, d) for d in divisors(ring.param)]
    if backend == Backend.PROD:
        left, right = (enumerate_ideals(IdealFamily(c, family.modulus_range)) for c in ring.components)
        return [Ideal(ring, (a, b)) for a in left for b in right]
    if backend in (Backend.INT, Backend.INT_INV):
        if family.modulus_range is None:
            raise ScopeError(f"enumerating ideals of {ring} needs a modulus range")
        lo, hi = family.modulus_range
        if lo < 0 or hi < lo:
            raise ScopeError(f"invalid modulus range {lo}..{hi}")
        moduli = range(lo, hi + 1)
        if backend == Backend.INT_INV:
            moduli = [m for m in moduli if m == 0 or gcd(m, ring.param) == 1]
        return [Ideal(ring, m) for m in moduli]
    if backend == Backend.INT_LOC:
        if family.exponent_max is None:
            raise ScopeError(f"enumerating ideals of {ring} needs an exponent bound")
        result = [Ideal(ring, k) for k in range(family.exponent_max + 1)]
        return result + [zero_ideal(ring)]
    if family.degree is None:
        raise ScopeError("enumerating monomial ideals needs a degree bound")
    gens = sorted(mono.antichains(family.degree), key=mono.sort_key)
    return [whole_ring(ring)] + [Ideal(ring, g) for g in gens]


def proper_ideals(family: IdealFamily) -> List[Ideal]:
    return [i for i in enumerate_ideals(family) if i.is_proper]
