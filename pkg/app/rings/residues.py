"""
Residue systems: the finite quotient used to decide predicates on infinite rings.

Membership in an ideal of modulus m, and in its radical, depends only on the
residue class mod m. Each class of Z or Z[1/s] contains nonunits, so a
predicate quantified over nonunits can be decided by scanning classes and
lifting each one to a canonical nonunit representative.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple

from app.rings.handles import Backend, Element, RingHandle
from app.rings.structure import is_unit


def nonunit_lift(ring: RingHandle, modulus: int, residue: int) -> Optional[Any]:
    """Canonical nonunit payload in the class ``residue`` mod ``modulus``, if any."""
    backend = ring.backend
    if backend == Backend.INT:
        if modulus == 0:
            return residue if abs(residue) != 1 else None
        r = residue % modulus
        # the least member of a class is a unit only for the class of 1
        return r + modulus if r == 1 else r
    if backend == Backend.INT_INV:
        if modulus == 0:
            candidate = ring.element(residue)
            return residue if not is_unit(ring, candidate) else None
        value = residue
        while is_unit(ring, ring.element(value)):
            value += modulus
        return value
    if backend == Backend.INT_LOC:
        return Fraction(residue) if residue % ring.param == 0 else None
    if backend == Backend.ZMOD:
        return residue if not is_unit(ring, ring.element(residue)) else None
    raise ValueError(f"no residue lifting for {ring}")


@dataclass(frozen=True)
class ResidueSystem:
    """Classes of a ring modulo an ideal, with a nonunit representative per class."""

    ring: RingHandle
    modulus: Optional[int]
    classes: Tuple[Any, ...]
    representatives: Tuple[Optional[Element], ...]

    def nonunit_classes(self) -> Tuple[Any, ...]:
        return tuple(c for c, r in zip(self.classes, self.representatives) if r is not None)

    def representative(self, cls: Any) -> Optional[Element]:
        return self.representatives[self.classes.index(cls)]

    def describe(self) -> str:
        if self.modulus is None:
            return f"elements of {self.ring}"
        return f"{self.ring} mod {self.modulus}"


def residue_system(ring: RingHandle, modulus: Optional[int] = None) -> ResidueSystem:
    """Residue system of ``ring`` modulo the integer ``modulus``.

    Finite rings ignore the modulus: the classes are the elements themselves
    and a class has a representative exactly when it is a nonunit.
    """
    if ring.is_finite:
        classes = tuple(e.value for e in ring.elements())
        reps = tuple(
            None if is_unit(ring, e) else e for e in ring.elements()
        )
        return ResidueSystem(ring, None, classes, reps)

    if ring.backend not in (Backend.INT, Backend.INT_INV, Backend.INT_LOC):
        raise ValueError(f"{ring} has no integer residue system")
    if modulus is None or modulus < 1:
        raise ValueError("an infinite ring needs a positive modulus")

    classes = tuple(range(modulus))
    reps = []
    for c in classes:
        lift = nonunit_lift(ring, modulus, c)
        reps.append(None if lift is None else ring.element(lift))
    return ResidueSystem(ring, modulus, classes, tuple(reps))
