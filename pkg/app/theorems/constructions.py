"""
Certified constructions of 1-absorbing primary ideals in quasilocal rings:
``x M`` for a prime element ``x`` with ``xR != M`` (never primary) and
``P M`` for a prime ideal ``P``.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from loguru import logger
from pydantic import BaseModel

from app.classify.predicates import is_one_absorbing_primary, is_prime_ideal, is_primary
from app.classify.report import PropertyVerdict
from app.errors import PreconditionError, UnsupportedOperationError
from app.ideals.ideal import Ideal, contains, maximal_ideal, principal_ideal
from app.ideals.operations import is_subideal, product, radical
from app.rings.handles import Backend, Element, RingHandle
from app.rings.structure import is_prime_element, is_quasilocal
from app.verdict import Method, Verdict


@dataclass(frozen=True)
class Construction:
    kind: str
    ideal: Ideal
    one_absorbing: Verdict
    primary: Verdict
    certificate: str
    witnesses: Tuple[Element, ...] = ()
    agreement: bool = True


class ConstructionReport(BaseModel):
    kind: str
    ring: str
    ideal: str
    radical: str
    one_absorbing_primary: PropertyVerdict
    primary: PropertyVerdict
    certificate: str
    witnesses: List[str]
    agreement: bool

    @classmethod
    def from_construction(cls, c: Construction) -> "ConstructionReport":
        return cls(
            kind=c.kind,
            ring=str(c.ideal.ring),
            ideal=str(c.ideal),
            radical=str(radical(c.ideal)),
            one_absorbing_primary=PropertyVerdict.from_verdict(c.one_absorbing),
            primary=PropertyVerdict.from_verdict(c.primary),
            certificate=c.certificate,
            witnesses=[str(w) for w in c.witnesses],
            agreement=c.agreement,
        )

    def to_text(self) -> str:
        text = f"{self.kind} in {self.ring}: {self.ideal} (radical {self.radical}) {self.certificate}"
        if self.witnesses:
            text += " witnesses " + ",".join(self.witnesses)
        return text


def _maximal(ring: RingHandle) -> Ideal:
    if not is_quasilocal(ring):
        raise PreconditionError("not-quasilocal", f"{ring} is not quasilocal")
    maximal = maximal_ideal(ring)
    if maximal is None:
        raise UnsupportedOperationError(f"no closed-form maximal ideal for {ring}")
    return maximal


def _outside(maximal: Ideal, principal: Ideal) -> Element:
    """An element of ``maximal`` missing from ``principal``."""
    ring = maximal.ring
    if ring.backend == Backend.MON_LOC:
        candidates = [ring.element("x"), ring.element("y")]
    elif ring.is_finite:
        candidates = list(ring.elements())
    else:
        raise UnsupportedOperationError(f"cannot search {ring} for an element of M outside xR")
    for m in candidates:
        if contains(maximal, m) and not contains(principal, m):
            return m
    raise UnsupportedOperationError(f"no element of {maximal} outside {principal} found")


def _cross_check(ideal: Ideal, expect_primary: Optional[bool]) -> bool:
    agrees = not is_one_absorbing_primary(ideal).is_refuted
    if expect_primary is False:
        agrees = agrees and not is_primary(ideal).holds
    if not agrees:
        logger.error(f"classification contradicts the construction certificate for {ideal}")
    return agrees


def construct_xM(ring: RingHandle, x: Element) -> Construction:
    """``x M``: 1-absorbing primary and not primary.

    Raises:
        PreconditionError: ``not-quasilocal``, ``zero-element``, ``unit-element``,
            ``not-prime`` or ``principal-maximal``
    """
    maximal = _maximal(ring)
    if x.ring != ring:
        raise PreconditionError("wrong-ring", f"{x} is not an element of {ring}")
    if not is_prime_element(ring, x).holds:
        raise PreconditionError("not-prime", f"{x} is not a prime element of {ring}")
    principal = principal_ideal(ring, x)
    if principal == maximal:
        raise PreconditionError("principal-maximal", f"xR equals the maximal ideal {maximal} of {ring}")

    ideal = product(principal, maximal)
    m = _outside(maximal, principal)
    # x m lies in xM while x is outside xM and m outside the radical xR
    one_abs = Verdict.proven(Method.CERTIFICATE, note="x M with x prime and xR != M")
    primary = Verdict.refuted(Method.CERTIFICATE, (x, m))
    logger.info(f"constructed {ideal} = ({x}) M in {ring}")
    return Construction(
        kind="xM",
        ideal=ideal,
        one_absorbing=one_abs,
        primary=primary,
        certificate="1-absorbing primary, not primary",
        witnesses=(x, m),
        agreement=_cross_check(ideal, expect_primary=False),
    )


def construct_PM(ring: RingHandle, prime: Ideal) -> Construction:
    """``P M`` for a prime ideal ``P``; its radical is ``P``.

    Raises:
        PreconditionError: ``not-quasilocal`` or ``not-prime``
    """
    maximal = _maximal(ring)
    if prime.ring != ring:
        raise PreconditionError("wrong-ring", f"{prime} is not an ideal of {ring}")
    if not is_prime_ideal(prime).holds:
        raise PreconditionError("not-prime", f"{prime} is not a prime ideal of {ring}")
    if not is_subideal(prime, maximal):
        raise PreconditionError("not-contained", f"{prime} is not inside {maximal}")

    ideal = product(prime, maximal)
    if radical(ideal) != prime:
        logger.error(f"radical of {ideal} is {radical(ideal)}, expected {prime}")
        raise AssertionError(f"radical of P M differs from P = {prime}")
    logger.info(f"constructed {ideal} = ({prime}) M in {ring}")
    return Construction(
        kind="PM",
        ideal=ideal,
        one_absorbing=Verdict.proven(Method.CERTIFICATE, note="P M with P prime"),
        primary=is_primary(ideal),
        certificate=f"1-absorbing primary with radical {prime}",
        agreement=_cross_check(ideal, expect_primary=None),
    )
