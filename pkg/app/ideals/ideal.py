"""
Ideal representations per backend.

Payloads:
    Z/n       divisor d of n, the ideal dZ/nZ (d = n is the zero ideal)
    Z         m >= 0, the ideal mZ (0 is the zero ideal, 1 the whole ring)
    Z[1/s]    m >= 0 coprime to s, the ideal m Z[1/s]
    Z_(p)     k >= 0 for p^k Z_(p), or None for the zero ideal
    products  pair of component ideals
    k[x,y]    minimal monomial generating set
"""

import re
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, Optional

from app.errors import BackendMismatchError, ParseError, UnsupportedOperationError
from app.ideals import monomial as mono
from app.rings import poly as P
from app.rings.factor import prime_power, strip_primes, valuation
from app.rings.handles import Backend, Element, RingHandle

_MODULUS = re.compile(r"^\(\s*(\d+)\s*\)$")
_LOCAL = re.compile(r"^p(?:\^(\d+))?$")


@dataclass(frozen=True)
class Ideal:
    ring: RingHandle
    payload: Any

    def __post_init__(self):
        object.__setattr__(self, "payload", _canonical(self.ring, self.payload))

    @property
    def is_proper(self) -> bool:
        backend = self.ring.backend
        if backend == Backend.ZMOD:
            return self.payload != 1
        if backend == Backend.PROD:
            return any(c.is_proper for c in self.payload)
        if backend in (Backend.INT, Backend.INT_INV):
            return self.payload != 1
        if backend == Backend.INT_LOC:
            return self.payload != 0
        return self.payload != mono.WHOLE

    @property
    def is_zero(self) -> bool:
        backend = self.ring.backend
        if backend == Backend.ZMOD:
            return self.payload == self.ring.param
        if backend == Backend.PROD:
            return all(c.is_zero for c in self.payload)
        if backend in (Backend.INT, Backend.INT_INV):
            return self.payload == 0
        if backend == Backend.INT_LOC:
            return self.payload is None
        return self.payload == mono.ZERO

    @property
    def modulus(self) -> int:
        """Integer generator of an ideal of Z/n, Z or Z[1/s]; p^k for Z_(p)."""
        backend = self.ring.backend
        if backend in (Backend.ZMOD, Backend.INT, Backend.INT_INV):
            return self.payload
        if backend == Backend.INT_LOC:
            return 0 if self.payload is None else self.ring.param**self.payload
        raise UnsupportedOperationError(f"ideals of {self.ring} have no integer modulus")

    def component(self, i: int) -> "Ideal":
        if self.ring.backend != Backend.PROD:
            raise BackendMismatchError(f"{self.ring} is not a product ring")
        return self.payload[i]

    def sort_key(self):
        backend = self.ring.backend
        if backend == Backend.PROD:
            return tuple(c.sort_key() for c in self.payload)
        if backend == Backend.INT_LOC:
            return (1, 0) if self.payload is None else (0, self.payload)
        if backend == Backend.MON_LOC:
            return mono.sort_key(self.payload)
        return self.payload

    def to_dict(self) -> Dict[str, Any]:
        return {"ring": str(self.ring), "ideal": str(self)}

    def __str__(self) -> str:
        backend = self.ring.backend
        if backend == Backend.PROD:
            return "x".join(str(c) for c in self.payload)
        if backend == Backend.ZMOD:
            return "(0)" if self.is_zero else f"({self.payload})"
        if backend in (Backend.INT, Backend.INT_INV):
            return f"({self.payload})"
        if backend == Backend.INT_LOC:
            if self.payload is None:
                return "(0)"
            if self.payload == 0:
                return "(1)"
            return "p" if self.payload == 1 else f"p^{self.payload}"
        if self.payload == mono.WHOLE:
            return "(1)"
        if self.payload == mono.ZERO:
            return "(0)"
        gens = sorted(self.payload, key=P.monomial_key)
        return ",".join(P.format_monomial(g) for g in gens)

    def __repr__(self) -> str:
        return f"Ideal({self.ring}, {self})"


def _canonical(ring: RingHandle, payload: Any) -> Any:
    backend = ring.backend
    if backend == Backend.ZMOD:
        return gcd(int(payload), ring.param)
    if backend == Backend.INT:
        return abs(int(payload))
    if backend == Backend.INT_INV:
        return abs(strip_primes(int(payload), ring.primes))
    if backend == Backend.INT_LOC:
        if payload is not None and payload < 0:
            raise ValueError("exponent must be nonnegative")
        return payload
    if backend == Backend.PROD:
        left, right = payload
        for expected, got in zip(ring.components, (left, right)):
            if got.ring != expected:
                raise BackendMismatchError(f"{got} is not an ideal of {expected}")
        return (left, right)
    return mono.minimalize(payload)


def whole_ring(ring: RingHandle) -> Ideal:
    backend = ring.backend
    if backend == Backend.PROD:
        return Ideal(ring, tuple(whole_ring(c) for c in ring.components))
    if backend == Backend.INT_LOC:
        return Ideal(ring, 0)
    if backend == Backend.MON_LOC:
        return Ideal(ring, mono.WHOLE)
    return Ideal(ring, 1)


def zero_ideal(ring: RingHandle) -> Ideal:
    backend = ring.backend
    if backend == Backend.PROD:
        return Ideal(ring, tuple(zero_ideal(c) for c in ring.components))
    if backend == Backend.INT_LOC:
        return Ideal(ring, None)
    if backend == Backend.MON_LOC:
        return Ideal(ring, mono.ZERO)
    return Ideal(ring, 0)


def principal_ideal(ring: RingHandle, x: Element) -> Ideal:
    """The ideal ``xR``.

    Raises:
        UnsupportedOperationError: for a non-monomial generator of k[x,y]
    """
    if x.ring != ring:
        raise BackendMismatchError(f"{x} belongs to {x.ring}, not {ring}")
    backend = ring.backend
    if backend == Backend.PROD:
        return Ideal(
            ring, tuple(principal_ideal(c, x.component(i)) for i, c in enumerate(ring.components))
        )
    if backend in (Backend.ZMOD, Backend.INT):
        return Ideal(ring, x.value)
    if backend == Backend.INT_INV:
        return Ideal(ring, x.value.numerator)
    if backend == Backend.INT_LOC:
        if x.is_zero:
            return Ideal(ring, None)
        return Ideal(ring, valuation(x.value.numerator, ring.param))
    if x.is_zero:
        return Ideal(ring, mono.ZERO)
    f = x.value[0]
    if not P.is_monomial_times_unit(f):
        raise UnsupportedOperationError(f"{x} does not generate a monomial ideal")
    return Ideal(ring, frozenset({P.monomial_part(f)}))


def maximal_ideal(ring: RingHandle) -> Optional[Ideal]:
    """The unique maximal ideal of a quasilocal backend, None otherwise."""
    backend = ring.backend
    if backend == Backend.ZMOD:
        pk = prime_power(ring.param)
        return Ideal(ring, pk[0]) if pk else None
    if backend == Backend.INT_LOC:
        return Ideal(ring, 1)
    if backend == Backend.MON_LOC:
        return Ideal(ring, frozenset({(1, 0), (0, 1)}))
    return None


def contains(ideal: Ideal, x: Element) -> bool:
    """Exact membership of ``x`` in ``ideal``."""
    ring = ideal.ring
    if x.ring != ring:
        raise BackendMismatchError(f"{x} belongs to {x.ring}, not {ring}")
    backend = ring.backend
    if backend == Backend.ZMOD:
        return x.value % ideal.payload == 0
    if backend == Backend.PROD:
        return all(contains(c, x.component(i)) for i, c in enumerate(ideal.payload))
    if backend == Backend.INT:
        return x.value == 0 if ideal.payload == 0 else x.value % ideal.payload == 0
    if backend == Backend.INT_INV:
        a = x.value.numerator
        return a == 0 if ideal.payload == 0 else a % ideal.payload == 0
    if backend == Backend.INT_LOC:
        if x.is_zero:
            return True
        if ideal.payload is None:
            return False
        return valuation(x.value.numerator, ring.param) >= ideal.payload
    # the denominator is a unit, so only the numerator's monomials matter
    return mono.contains_support(ideal.payload, P.support(x.value[0]))


def parse_ideal(ring: RingHandle, text: str) -> Ideal:
    """Parse an ideal literal: ``(12)``, ``(4)x(9)``, ``x^2,x*y``, ``p^3``, ``(0)``."""
    token = text.strip()
    backend = ring.backend
    if backend == Backend.PROD:
        parts = token.split(")x(")
        if len(parts) != 2:
            raise ParseError("expected a product ideal like (4)x(9)", token=token)
        left, right = ring.components
        return Ideal(ring, (parse_ideal(left, parts[0] + ")"), parse_ideal(right, "(" + parts[1])))
    match = _MODULUS.match(token)
    if backend == Backend.INT_LOC:
        if match and int(match.group(1)) in (0, 1):
            return Ideal(ring, None if match.group(1) == "0" else 0)
        local = _LOCAL.match(token)
        if not local:
            raise ParseError("expected p, p^k, (0) or (1)", token=token)
        return Ideal(ring, int(local.group(1) or 1))
    if backend == Backend.MON_LOC:
        if match and int(match.group(1)) in (0, 1):
            return Ideal(ring, mono.ZERO if match.group(1) == "0" else mono.WHOLE)
        gens = []
        for piece in token.split(","):
            num, den = P.parse_fraction(piece)
            if not den.is_one or not P.is_monomial_times_unit(num) or len(P.support(num)) != 1:
                raise ParseError("generators must be monomials", token=piece.strip())
            gens.append(P.monomial_part(num))
        return Ideal(ring, frozenset(gens))
    if not match:
        raise ParseError("expected an ideal like (12)", token=token)
    return Ideal(ring, int(match.group(1)))
