"""
Ideal arithmetic: radical, colon, product, intersection, sum, powers,
containment and the set Z_I(R) of elements that are zero divisors modulo I.
"""

from math import gcd, lcm
from typing import Callable, List

from loguru import logger

from app.errors import BackendMismatchError, NotProperError, ScopeError, UnsupportedOperationError
from app.ideals import monomial as mono
from app.ideals.ideal import Ideal, contains, whole_ring
from app.rings import poly as P
from app.rings.factor import divisors, squarefree_kernel, strip_primes, valuation
from app.rings.handles import Backend, Element


def _same_ring(left: Ideal, right: Ideal) -> None:
    if left.ring != right.ring:
        raise BackendMismatchError(f"{left} and {right} live in different rings")


def _componentwise(left: Ideal, right: Ideal, op: Callable[[Ideal, Ideal], Ideal]) -> Ideal:
    return Ideal(left.ring, tuple(op(a, b) for a, b in zip(left.payload, right.payload)))


def radical(ideal: Ideal) -> Ideal:
    """Closed-form radical: squarefree kernel of the modulus, or squarefree generators."""
    backend = ideal.ring.backend
    if backend == Backend.PROD:
        return Ideal(ideal.ring, tuple(radical(c) for c in ideal.payload))
    if backend in (Backend.ZMOD, Backend.INT, Backend.INT_INV):
        return Ideal(ideal.ring, squarefree_kernel(ideal.payload))
    if backend == Backend.INT_LOC:
        k = ideal.payload
        return Ideal(ideal.ring, k if k is None or k == 0 else 1)
    return Ideal(ideal.ring, mono.radical(ideal.payload))


def radical_contains(ideal: Ideal, x: Element) -> bool:
    return contains(radical(ideal), x)


def radical_contains_by_powers(ideal: Ideal, x: Element) -> bool:
    """Membership in the radical by searching ``x^e`` in ``ideal`` for ``e <= |R|``."""
    ring = ideal.ring
    if not ring.is_finite:
        raise UnsupportedOperationError("power search needs a finite ring")
    power = x
    for _ in range(ring.size):
        if contains(ideal, power):
            return True
        power = power * x
    return False


def colon(ideal: Ideal, c: Element) -> Ideal:
    """The ideal ``(I : c) = {r : c r in I}``.

    Raises:
        UnsupportedOperationError: when ``c`` is not a monomial times a unit in k[x,y]
    """
    ring = ideal.ring
    if c.ring != ring:
        raise BackendMismatchError(f"{c} belongs to {c.ring}, not {ring}")
    backend = ring.backend
    if backend == Backend.PROD:
        return Ideal(ring, tuple(colon(comp, c.component(i)) for i, comp in enumerate(ideal.payload)))
    if backend == Backend.ZMOD:
        return Ideal(ring, ideal.payload // gcd(ideal.payload, c.value))
    if backend in (Backend.INT, Backend.INT_INV):
        m = ideal.payload
        value = c.value if backend == Backend.INT else strip_primes(c.value.numerator, ring.primes)
        if m == 0:
            return Ideal(ring, 1 if value == 0 else 0)
        return Ideal(ring, m // gcd(m, value))
    if backend == Backend.INT_LOC:
        k = ideal.payload
        if c.is_zero:
            return whole_ring(ring)
        if k is None:
            return ideal
        return Ideal(ring, max(k - valuation(c.value.numerator, ring.param), 0))
    if c.is_zero:
        return whole_ring(ring)
    f = c.value[0]
    if not P.is_monomial_times_unit(f):
        raise UnsupportedOperationError(f"colon by the non-monomial {c} is not supported")
    return Ideal(ring, mono.colon(ideal.payload, P.monomial_part(f)))


def product(left: Ideal, right: Ideal) -> Ideal:
    _same_ring(left, right)
    backend = left.ring.backend
    if backend == Backend.PROD:
        return _componentwise(left, right, product)
    if backend == Backend.INT_LOC:
        a, b = left.payload, right.payload
        return Ideal(left.ring, None if a is None or b is None else a + b)
    if backend == Backend.MON_LOC:
        return Ideal(left.ring, mono.product(left.payload, right.payload))
    return Ideal(left.ring, left.payload * right.payload)


def intersect(left: Ideal, right: Ideal) -> Ideal:
    _same_ring(left, right)
    backend = left.ring.backend
    if backend == Backend.PROD:
        return _componentwise(left, right, intersect)
    if backend == Backend.INT_LOC:
        a, b = left.payload, right.payload
        return Ideal(left.ring, None if a is None or b is None else max(a, b))
    if backend == Backend.MON_LOC:
        return Ideal(left.ring, mono.intersect(left.payload, right.payload))
    return Ideal(left.ring, lcm(left.payload, right.payload))


def ideal_sum(left: Ideal, right: Ideal) -> Ideal:
    _same_ring(left, right)
    backend = left.ring.backend
    if backend == Backend.PROD:
        return _componentwise(left, right, ideal_sum)
    if backend == Backend.INT_LOC:
        a, b = left.payload, right.payload
        if a is None or b is None:
            return right if a is None else left
        return Ideal(left.ring, min(a, b))
    if backend == Backend.MON_LOC:
        return Ideal(left.ring, mono.add(left.payload, right.payload))
    return Ideal(left.ring, gcd(left.payload, right.payload))


def power(ideal: Ideal, n: int) -> Ideal:
    if n < 1:
        raise ValueError(f"ideal powers need n >= 1, got {n}")
    result = ideal
    for _ in range(n - 1):
        result = product(result, ideal)
    return result


def is_subideal(small: Ideal, big: Ideal) -> bool:
    """True when ``small`` is contained in ``big``."""
    _same_ring(small, big)
    backend = big.ring.backend
    if backend == Backend.PROD:
        return all(is_subideal(a, b) for a, b in zip(small.payload, big.payload))
    if backend == Backend.ZMOD:
        return small.payload % big.payload == 0
    if backend in (Backend.INT, Backend.INT_INV):
        if big.payload == 0:
            return small.payload == 0
        return small.payload % big.payload == 0
    if backend == Backend.INT_LOC:
        if small.payload is None:
            return True
        return big.payload is not None and small.payload >= big.payload
    return mono.is_subset(small.payload, big.payload)


def ideal_elements(ideal: Ideal) -> List[Element]:
    """Members of an ideal of a finite ring, in canonical order."""
    if not ideal.ring.is_finite:
        raise ScopeError(f"{ideal.ring} is infinite")
    return [e for e in ideal.ring.elements() if contains(ideal, e)]


def _containing(ideal: Ideal) -> List[Ideal]:
    """Every ideal containing ``ideal``, itself and the whole ring included."""
    ring = ideal.ring
    backend = ring.backend
    if backend == Backend.PROD:
        left, right = (_containing(c) for c in ideal.payload)
        return [Ideal(ring, (a, b)) for a in left for b in right]
    if backend in (Backend.ZMOD, Backend.INT, Backend.INT_INV):
        if ideal.payload == 0:
            raise ScopeError(f"the zero ideal of {ring} lies in infinitely many ideals")
        return [Ideal(ring, d) for d in divisors(ideal.payload)]
    if backend == Backend.INT_LOC:
        if ideal.payload is None:
            raise ScopeError(f"the zero ideal of {ring} lies in infinitely many ideals")
        return [Ideal(ring, k) for k in range(ideal.payload + 1)]
    raise UnsupportedOperationError(f"overideals are not enumerable on {ring}")


def overideals(ideal: Ideal) -> List[Ideal]:
    """Proper ideals strictly containing ``ideal``, sorted canonically."""
    found = [J for J in _containing(ideal) if J != ideal and J.is_proper]
    return sorted(found, key=lambda J: J.sort_key())


def in_zdiv(ideal: Ideal, r: Element) -> bool:
    """Whether ``r s`` lies in ``ideal`` for some ``s`` outside it.

    Equivalent to ``(I : r) != I``.
    """
    if not ideal.is_proper:
        raise NotProperError(f"{ideal} is the whole ring")
    result = colon(ideal, r) != ideal
    logger.debug(f"{r} in Z_I for I = {ideal}: {result}")
    return result


def in_zdiv_by_search(ideal: Ideal, r: Element) -> bool:
    """Exhaustive check of ``in_zdiv`` on a finite ring."""
    if not ideal.is_proper:
        raise NotProperError(f"{ideal} is the whole ring")
    if not ideal.ring.is_finite:
        raise ScopeError(f"{ideal.ring} is infinite")
    return any(
        not contains(ideal, s) and contains(ideal, r * s) for s in ideal.ring.elements()
    )
