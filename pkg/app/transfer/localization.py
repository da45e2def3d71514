"""
Localizations of Z at the powers of s and at the complement of a prime ideal pZ.
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict

from loguru import logger

from app.errors import BackendMismatchError, NotProperError, ParseError
from app.ideals.ideal import Ideal
from app.ideals.operations import in_zdiv
from app.rings import handles as H
from app.rings.factor import is_prime, prime_factors, valuation
from app.rings.handles import Backend, RingHandle

_POWERS = re.compile(r"^S=(\d+)\^k$")
_COMPLEMENT = re.compile(r"^S=comp\((\d+)\)$")


class MultSetKind(str, Enum):
    POWERS = "powers"
    COMPLEMENT = "complement"


@dataclass(frozen=True)
class LocalizationSpec:
    """A multiplicative subset of Z: ``{s^k : k >= 0}`` or ``Z minus pZ``."""

    kind: MultSetKind
    param: int

    def __post_init__(self):
        if self.kind == MultSetKind.POWERS and self.param < 2:
            raise ValueError(f"powers of s need s >= 2, got {self.param}")
        if self.kind == MultSetKind.COMPLEMENT and not is_prime(self.param):
            raise ValueError(f"the complement of pZ needs a prime, got {self.param}")

    @property
    def source(self) -> RingHandle:
        return H.integers()

    @property
    def target(self) -> RingHandle:
        if self.kind == MultSetKind.POWERS:
            return H.int_inv(self.param)
        return H.int_loc(self.param)

    def contains(self, x: int) -> bool:
        """Membership of the integer ``x`` in the multiplicative set."""
        if self.kind == MultSetKind.COMPLEMENT:
            return x % self.param != 0
        if x < 1:
            return False
        while x % self.param == 0:
            x //= self.param
        return x == 1

    def __str__(self) -> str:
        if self.kind == MultSetKind.POWERS:
            return f"S={self.param}^k"
        return f"S=comp({self.param})"


def powers_of(s: int) -> LocalizationSpec:
    return LocalizationSpec(MultSetKind.POWERS, s)


def complement_of(p: int) -> LocalizationSpec:
    return LocalizationSpec(MultSetKind.COMPLEMENT, p)


def parse_localization(text: str) -> LocalizationSpec:
    """Parse ``S=2^k`` or ``S=comp(5)``."""
    spec = text.strip().replace(" ", "")
    for pattern, build in ((_POWERS, powers_of), (_COMPLEMENT, complement_of)):
        match = pattern.match(spec)
        if match:
            try:
                return build(int(match.group(1)))
            except ValueError as e:
                raise ParseError(str(e), token=spec) from e
    raise ParseError("expected S=s^k or S=comp(p)", token=spec)


@dataclass(frozen=True)
class Localized:
    """``S^-1 I`` together with the two disjointness conditions of the transfer theorem."""

    spec: LocalizationSpec
    ideal: Ideal
    extended: Ideal
    disjoint: bool
    zdiv_disjoint: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "spec": str(self.spec),
            "ideal": str(self.ideal),
            "extended": str(self.extended),
            "target": str(self.extended.ring),
            "disjoint": self.disjoint,
            "zdiv_disjoint": self.zdiv_disjoint,
        }


def _extend(spec: LocalizationSpec, m: int) -> Ideal:
    target = spec.target
    if spec.kind == MultSetKind.POWERS:
        return Ideal(target, m)
    return Ideal(target, None if m == 0 else valuation(m, spec.param))


def localize(spec: LocalizationSpec, ideal: Ideal) -> Localized:
    """Extend a proper ideal ``mZ`` to the localization.

    ``disjoint`` is ``I`` meeting no element of ``S``; ``zdiv_disjoint`` is ``S``
    meeting no zero divisor modulo ``I``. The latter is decided on the
    generators of ``S`` that can share a factor with ``m``.
    """
    if ideal.ring.backend != Backend.INT:
        raise BackendMismatchError(f"localization specs apply to ideals of Z, not {ideal.ring}")
    if not ideal.is_proper:
        raise NotProperError(f"{ideal} is the whole ring")
    m = ideal.modulus
    ring = ideal.ring
    if spec.kind == MultSetKind.POWERS:
        s = spec.param
        disjoint = m == 0 or not set(prime_factors(m)) <= set(prime_factors(s))
        zdiv_disjoint = not in_zdiv(ideal, ring.element(s))
    else:
        p = spec.param
        disjoint = m % p == 0
        generators = [q for q in prime_factors(m) if q != p]
        zdiv_disjoint = not any(in_zdiv(ideal, ring.element(q)) for q in generators)
    result = Localized(spec, ideal, _extend(spec, m), disjoint, zdiv_disjoint)
    logger.debug(f"localized {ideal} at {spec}: {result.to_dict()}")
    return result
