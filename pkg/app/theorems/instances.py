"""
Rings and ideals instantiated by the verifiers for a given scope.
"""

from typing import List

from app.classify.monloc_search import SearchBounds
from app.config import settings
from app.ideals.families import IdealFamily, enumerate_ideals, proper_ideals
from app.ideals.ideal import Ideal
from app.rings import handles as H
from app.rings.factor import is_prime
from app.rings.handles import Backend, RingHandle
from app.theorems.ids import Scope

LOCAL_PRIMES = (2, 3, 5)
INVERTED = (2, 3)


def bounds(scope: Scope) -> SearchBounds:
    return SearchBounds(scope.monloc_degree, settings.MONLOC_MAX_TERMS)


def zmod_rings(scope: Scope) -> List[RingHandle]:
    if not scope.includes("zmod"):
        return []
    return [H.zmod(n) for n in range(2, scope.zmod_max + 1)]


def prod_rings(scope: Scope) -> List[RingHandle]:
    if not scope.includes("prod"):
        return []
    sizes = range(2, scope.prod_max + 1)
    return [H.prod(H.zmod(a), H.zmod(b)) for a in sizes for b in sizes]


def finite_rings(scope: Scope) -> List[RingHandle]:
    return zmod_rings(scope) + prod_rings(scope)


def chain_rings(scope: Scope) -> List[RingHandle]:
    """Z/p^k for the local primes and k up to the local exponent bound."""
    return [H.zmod(p**k) for p in LOCAL_PRIMES for k in range(1, scope.local_exponent_max + 1)]


def prime_fields(scope: Scope) -> List[RingHandle]:
    return [r for r in zmod_rings(scope) if is_prime(r.param)]


def ideals_of(ring: RingHandle, scope: Scope, proper: bool = True) -> List[Ideal]:
    """Ideals of ``ring`` within the scope's bounds."""
    backend = ring.backend
    if backend in (Backend.INT, Backend.INT_INV):
        family = IdealFamily(ring, modulus_range=(0, scope.int_max))
    elif backend == Backend.PROD and not ring.is_finite:
        family = IdealFamily(ring, modulus_range=(0, scope.prod_max))
    elif backend == Backend.INT_LOC:
        family = IdealFamily(ring, exponent_max=scope.local_exponent_max)
    elif backend == Backend.MON_LOC:
        family = IdealFamily(ring, degree=scope.monloc_degree)
    else:
        family = IdealFamily(ring)
    return proper_ideals(family) if proper else enumerate_ideals(family)


def int_ideals(scope: Scope, zero: bool = False) -> List[Ideal]:
    """Nonzero proper ideals mZ, 2 <= m <= int_max, optionally led by (0)."""
    if not scope.includes("int"):
        return []
    ring = H.integers()
    start = 0 if zero else 2
    return [Ideal(ring, m) for m in range(start, scope.int_max + 1) if m != 1]


def intinv_ideals(scope: Scope) -> List[Ideal]:
    if not scope.includes("intinv"):
        return []
    return [i for s in INVERTED for i in ideals_of(H.int_inv(s), scope)]


def intloc_ideals(scope: Scope) -> List[Ideal]:
    if not scope.includes("intloc"):
        return []
    return [i for p in LOCAL_PRIMES for i in ideals_of(H.int_loc(p), scope)]


def monloc_ideals(scope: Scope) -> List[Ideal]:
    if not scope.includes("monloc"):
        return []
    return ideals_of(H.mon_loc(), scope)


def zxz_ideals(scope: Scope) -> List[Ideal]:
    if not scope.includes("prod"):
        return []
    return ideals_of(H.prod(H.integers(), H.integers()), scope)


def finite_ideals(scope: Scope) -> List[Ideal]:
    return [i for r in finite_rings(scope) for i in ideals_of(r, scope)]


def every_ideal(scope: Scope) -> List[Ideal]:
    """Proper ideals of every family in the scope."""
    return (
        finite_ideals(scope)
        + zxz_ideals(scope)
        + int_ideals(scope, zero=True)
        + intinv_ideals(scope)
        + intloc_ideals(scope)
        + monloc_ideals(scope)
    )
