"""
Ring backends and their canonical elements.

A ``RingHandle`` names one concrete ring: Z/n, a binary product, Z, Z localized
at a prime, Z[1/s], or the polynomial ring Q[x, y] localized at (x, y).
``Element`` carries a canonical payload for its ring and supports the ring
operations through the usual operators.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product as cartesian
from typing import Any, Dict, Iterator, Tuple

from sympy import Poly

from app.errors import BackendMismatchError
from app.rings import poly as P
from app.rings.factor import is_prime, is_smooth, prime_factors


class Backend(str, Enum):
    """Kinds of ring the engine can decide questions about."""

    ZMOD = "zmod"
    PROD = "prod"
    INT = "int"
    INT_LOC = "intloc"
    INT_INV = "intinv"
    MON_LOC = "monloc"


@dataclass(frozen=True)
class RingHandle:
    """A concrete commutative ring.

    ``param`` is n for Z/n, the prime p for Z_(p) and s for Z[1/s]; products
    keep their two factors in ``components``.
    """

    backend: Backend
    param: int = 0
    components: Tuple["RingHandle", ...] = ()
    primes: Tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.backend == Backend.ZMOD and self.param < 2:
            raise ValueError(f"Z/n needs n >= 2, got {self.param}")
        if self.backend == Backend.INT_LOC and not is_prime(self.param):
            raise ValueError(f"Zloc needs a prime, got {self.param}")
        if self.backend == Backend.INT_INV:
            if self.param < 2:
                raise ValueError(f"Zinv needs s >= 2, got {self.param}")
            object.__setattr__(self, "primes", tuple(prime_factors(self.param)))
        if self.backend == Backend.PROD:
            if len(self.components) != 2:
                raise ValueError("a product ring has exactly two factors")
            for c in self.components:
                if c.backend not in (Backend.ZMOD, Backend.INT):
                    raise ValueError(f"product factors must be Z/n or Z, got {c}")

    @property
    def is_finite(self) -> bool:
        if self.backend == Backend.ZMOD:
            return True
        if self.backend == Backend.PROD:
            return all(c.is_finite for c in self.components)
        return False

    @property
    def size(self) -> int:
        if self.backend == Backend.ZMOD:
            return self.param
        if self.backend == Backend.PROD and self.is_finite:
            return self.components[0].size * self.components[1].size
        raise ValueError(f"{self} is infinite")

    def element(self, value: Any) -> "Element":
        """Build the canonical element of this ring from a raw value."""
        return Element(self, _canonical(self, value))

    def zero(self) -> "Element":
        if self.backend == Backend.PROD:
            return self.element((0, 0))
        if self.backend == Backend.MON_LOC:
            return self.element((P.poly(0), P.poly(1)))
        return self.element(0)

    def one(self) -> "Element":
        if self.backend == Backend.PROD:
            return self.element((1, 1))
        if self.backend == Backend.MON_LOC:
            return self.element((P.poly(1), P.poly(1)))
        return self.element(1)

    def elements(self) -> Iterator["Element"]:
        """All elements of a finite ring in canonical (lexicographic) order."""
        if self.backend == Backend.ZMOD:
            for a in range(self.param):
                yield Element(self, a)
        elif self.backend == Backend.PROD and self.is_finite:
            left, right = self.components
            for a, b in cartesian(range(left.param), range(right.param)):
                yield Element(self, (a, b))
        else:
            raise ValueError(f"cannot enumerate the infinite ring {self}")

    def __str__(self) -> str:
        if self.backend == Backend.ZMOD:
            return f"Z/{self.param}"
        if self.backend == Backend.PROD:
            return "x".join(str(c) for c in self.components)
        if self.backend == Backend.INT:
            return "Z"
        if self.backend == Backend.INT_LOC:
            return f"Zloc:{self.param}"
        if self.backend == Backend.INT_INV:
            return f"Zinv:{self.param}"
        return "kxy"


def zmod(n: int) -> RingHandle:
    return RingHandle(Backend.ZMOD, n)


def integers() -> RingHandle:
    return RingHandle(Backend.INT)


def int_loc(p: int) -> RingHandle:
    return RingHandle(Backend.INT_LOC, p)


def int_inv(s: int) -> RingHandle:
    return RingHandle(Backend.INT_INV, s)


def mon_loc() -> RingHandle:
    return RingHandle(Backend.MON_LOC)


def prod(left: RingHandle, right: RingHandle) -> RingHandle:
    return RingHandle(Backend.PROD, components=(left, right))


def _canonical(ring: RingHandle, value: Any) -> Any:
    backend = ring.backend
    if backend == Backend.ZMOD:
        return int(value) % ring.param
    if backend == Backend.INT:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            value = value.numerator
        return int(value)
    if backend == Backend.PROD:
        a, b = value
        left, right = ring.components
        return (_canonical(left, a), _canonical(right, b))
    if backend == Backend.INT_LOC:
        q = Fraction(value)
        if q.denominator % ring.param == 0:
            raise ValueError(f"{q} is not in Z localized at {ring.param}")
        return q
    if backend == Backend.INT_INV:
        q = Fraction(value)
        if not is_smooth(q.denominator, ring.primes):
            raise ValueError(f"{q} is not in Z[1/{ring.param}]")
        return q
    num, den = value if isinstance(value, tuple) else (P.poly(value), P.poly(1))
    if not isinstance(num, Poly):
        num = P.poly(num)
    if not isinstance(den, Poly):
        den = P.poly(den)
    return P.normalize_fraction(num, den)


@dataclass(frozen=True, eq=False)
class Element:
    """A ring element in canonical form."""

    ring: RingHandle
    value: Any

    def _check(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return self.ring.element(other)
        if other.ring != self.ring:
            raise BackendMismatchError(f"{other} belongs to {other.ring}, not {self.ring}")
        return other

    def __add__(self, other) -> "Element":
        other = self._check(other)
        return Element(self.ring, _add(self.ring, self.value, other.value))

    def __radd__(self, other) -> "Element":
        return self.__add__(other)

    def __neg__(self) -> "Element":
        return Element(self.ring, _neg(self.ring, self.value))

    def __sub__(self, other) -> "Element":
        return self + (-self._check(other))

    def __mul__(self, other) -> "Element":
        other = self._check(other)
        return Element(self.ring, _mul(self.ring, self.value, other.value))

    def __rmul__(self, other) -> "Element":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            raise ValueError("negative exponents are not supported")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element) or other.ring != self.ring:
            return NotImplemented
        if self.ring.backend == Backend.MON_LOC:
            (f1, g1), (f2, g2) = self.value, other.value
            return f1 * g2 == f2 * g1
        return self.value == other.value

    def __hash__(self) -> int:
        if self.ring.backend == Backend.MON_LOC:
            num, den = self.value
            return hash((self.ring, tuple(num.terms()), tuple(den.terms())))
        return hash((self.ring, self.value))

    @property
    def is_zero(self) -> bool:
        if self.ring.backend == Backend.PROD:
            return self.value == (0, 0)
        if self.ring.backend == Backend.MON_LOC:
            return self.value[0].is_zero
        return self.value == 0

    @property
    def numerator(self) -> Any:
        """Integer numerator for rational payloads, polynomial numerator for MonLoc."""
        if self.ring.backend in (Backend.INT_LOC, Backend.INT_INV):
            return self.value.numerator
        if self.ring.backend == Backend.MON_LOC:
            return self.value[0]
        return self.value

    def component(self, i: int) -> "Element":
        """The i-th coordinate (0 or 1) of a product element."""
        if self.ring.backend != Backend.PROD:
            raise BackendMismatchError(f"{self.ring} is not a product ring")
        return Element(self.ring.components[i], self.value[i])

    def to_dict(self) -> Dict[str, Any]:
        return {"ring": str(self.ring), "value": str(self)}

    def __str__(self) -> str:
        backend = self.ring.backend
        if backend == Backend.PROD:
            return f"({self.value[0]},{self.value[1]})"
        if backend == Backend.MON_LOC:
            num, den = self.value
            if den.is_one:
                return P.format_poly(num)
            return f"({P.format_poly(num)})/({P.format_poly(den)})"
        return str(self.value)

    def __repr__(self) -> str:
        return f"Element({self.ring}, {self})"


def _add(ring: RingHandle, a: Any, b: Any) -> Any:
    backend = ring.backend
    if backend == Backend.ZMOD:
        return (a + b) % ring.param
    if backend == Backend.PROD:
        left, right = ring.components
        return (_add(left, a[0], b[0]), _add(right, a[1], b[1]))
    if backend == Backend.MON_LOC:
        (f1, g1), (f2, g2) = a, b
        return P.normalize_fraction(f1 * g2 + f2 * g1, g1 * g2)
    return a + b


def _neg(ring: RingHandle, a: Any) -> Any:
    backend = ring.backend
    if backend == Backend.ZMOD:
        return (-a) % ring.param
    if backend == Backend.PROD:
        left, right = ring.components
        return (_neg(left, a[0]), _neg(right, a[1]))
    if backend == Backend.MON_LOC:
        return (-a[0], a[1])
    return -a


def _mul(ring: RingHandle, a: Any, b: Any) -> Any:
    backend = ring.backend
    if backend == Backend.ZMOD:
        return (a * b) % ring.param
    if backend == Backend.PROD:
        left, right = ring.components
        return (_mul(left, a[0], b[0]), _mul(right, a[1], b[1]))
    if backend == Backend.MON_LOC:
        (f1, g1), (f2, g2) = a, b
        return P.normalize_fraction(f1 * f2, g1 * g2)
    return a * b
