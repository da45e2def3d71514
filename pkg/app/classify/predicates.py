"""
Decision procedures for prime, maximal, primary, 1-absorbing primary,
2-absorbing primary and 2-absorbing ideals.

Every ring except the localized polynomial ring is reduced to its finite
gcd-class monoid (see ``scan.KeySpace``), so the oracle answers are exact.
Monomial ideals are decided by generator criteria and certificates where
the theory provides one, with a bounded search supplying witnesses and a
cross-check.
"""

from functools import lru_cache
from typing import Optional, Sequence, Tuple

from loguru import logger

from app.classify import monloc_search as ML
from app.classify.monloc_search import MonomialSpace, SearchBounds
from app.classify.scan import (
    KeySpace,
    SearchSpace,
    find_one_absorbing_witness,
    find_primary_witness,
    find_prime_witness,
    find_two_absorbing_primary_witness,
    find_two_absorbing_witness,
    search,
)
from app.config import settings
from app.errors import NotProperError, UnsupportedOperationError
from app.ideals import monomial as mono
from app.ideals.ideal import Ideal, contains
from app.ideals.operations import overideals, radical_contains
from app.rings.factor import is_prime, prime_factors, prime_power, valuation
from app.rings.handles import Backend, Element
from app.rings.residues import nonunit_lift
from app.rings.structure import is_unit
from app.verdict import Method, Verdict

PRIME = "prime"
MAXIMAL = "maximal"
PRIMARY = "primary"
ONE_ABSORBING = "one_absorbing_primary"
TWO_ABSORBING_PRIMARY = "two_absorbing_primary"
TWO_ABSORBING = "two_absorbing"

# finder and whether witness coordinates must be nonunits
_FINDERS = {
    PRIME: (find_prime_witness, False),
    PRIMARY: (find_primary_witness, False),
    ONE_ABSORBING: (find_one_absorbing_witness, True),
    TWO_ABSORBING_PRIMARY: (find_two_absorbing_primary_witness, False),
    TWO_ABSORBING: (find_two_absorbing_witness, False),
}


def _bounds(bounds: Optional[SearchBounds]) -> SearchBounds:
    return bounds or SearchBounds.from_settings()


def _require_proper(ideal: Ideal) -> None:
    if not ideal.is_proper:
        raise NotProperError(f"{ideal} is the whole ring of {ideal.ring}")


@lru_cache(maxsize=None)
def _space(ideal: Ideal, degree: int, max_terms: int) -> SearchSpace:
    if ideal.ring.backend == Backend.MON_LOC:
        return MonomialSpace(ideal, SearchBounds(degree, max_terms))
    return KeySpace(ideal)


@lru_cache(maxsize=None)
def _scan(kind: str, ideal: Ideal, degree: int, max_terms: int) -> Optional[Tuple[Element, ...]]:
    """Minimal witness of ``kind`` in the search space of ``ideal``, or None."""
    finder, nonunit = _FINDERS[kind]
    space = _space(ideal, degree, max_terms)
    hit = search(space, finder, settings.THREADS)
    logger.debug(f"{kind} scan of {ideal} over {space.describe()}: {hit}")
    if hit is None:
        return None
    return tuple(space.element(i, nonunit) for i in hit)


def _oracle(kind: str, ideal: Ideal, bounds: SearchBounds) -> Verdict:
    witness = _scan(kind, ideal, bounds.degree, bounds.max_terms)
    if witness is not None:
        return Verdict.refuted(Method.ORACLE, witness)
    if ideal.ring.backend == Backend.MON_LOC:
        return Verdict.unfalsified(bounds.describe())
    return Verdict.proven(Method.ORACLE)


def search_witness(kind: str, ideal: Ideal, bounds: Optional[SearchBounds] = None):
    """Raw scan result for ``kind``, bypassing criteria and certificates."""
    b = _bounds(bounds)
    return _scan(kind, ideal, b.degree, b.max_terms)


def is_prime_ideal(ideal: Ideal, bounds: Optional[SearchBounds] = None) -> Verdict:
    if not ideal.is_proper:
        return Verdict.refuted(Method.FAST_PATH, note="whole ring")
    b = _bounds(bounds)
    if ideal.ring.backend != Backend.MON_LOC:
        return _oracle(PRIME, ideal, b)
    if ideal.is_zero or mono.is_generated_by_variables(ideal.payload):
        return Verdict.proven(Method.FAST_PATH)
    witness = _scan(PRIME, ideal, b.degree, b.max_terms) or ML.prime_fallback(ideal)
    return Verdict.refuted(Method.FAST_PATH, witness)


def _enlarging_element(ideal: Ideal) -> Element:
    """An element outside a non-maximal proper ideal generating a proper ideal with it."""
    ring = ideal.ring
    backend = ring.backend
    if backend == Backend.PROD:
        left, right = ideal.payload
        if left.is_proper and right.is_proper:
            return ring.element((1, 0))
        if left.is_proper:
            return ring.element((_enlarging_element(left).value, 0))
        return ring.element((0, _enlarging_element(right).value))
    if backend == Backend.MON_LOC:
        var = (1, 0) if not mono.member(ideal.payload, (1, 0)) else (0, 1)
        return ML.monomial_element(ideal, var)
    if backend == Backend.INT_LOC:
        return ring.element(ring.param)
    m = ideal.modulus
    if m != 0:
        return ring.element(prime_factors(m)[0])
    p = 2
    while p in ring.primes:
        p += 1
        while not is_prime(p):
            p += 1
    return ring.element(p)


def _maximal_closed_form(ideal: Ideal) -> bool:
    backend = ideal.ring.backend
    if backend == Backend.PROD:
        left, right = ideal.payload
        if left.is_proper and right.is_proper:
            return False
        return _maximal_closed_form(left if left.is_proper else right)
    if backend == Backend.INT_LOC:
        return ideal.payload == 1
    if backend == Backend.MON_LOC:
        return ideal.payload == frozenset({(1, 0), (0, 1)})
    return is_prime(ideal.modulus)


def is_maximal_ideal(ideal: Ideal) -> Verdict:
    """Maximality: by overideal enumeration on finite rings, closed forms elsewhere."""
    if not ideal.is_proper:
        return Verdict.refuted(Method.FAST_PATH, note="whole ring")
    if ideal.ring.is_finite:
        maximal = not overideals(ideal)
        method = Method.ORACLE
    else:
        maximal = _maximal_closed_form(ideal)
        method = Method.FAST_PATH
    if maximal:
        return Verdict.proven(method)
    return Verdict.refuted(method, (_enlarging_element(ideal),))


def is_primary(ideal: Ideal, bounds: Optional[SearchBounds] = None) -> Verdict:
    _require_proper(ideal)
    b = _bounds(bounds)
    if ideal.ring.backend != Backend.MON_LOC:
        return _oracle(PRIMARY, ideal, b)
    if mono.has_pure_powers(ideal.payload):
        return Verdict.proven(Method.FAST_PATH)
    witness = _scan(PRIMARY, ideal, b.degree, b.max_terms) or ML.primary_fallback(ideal)
    return Verdict.refuted(Method.FAST_PATH, witness)


def _radical_is_prime(ideal: Ideal) -> bool:
    return mono.radical(ideal.payload) != frozenset({(1, 1)})


def _monloc_one_absorbing(ideal: Ideal, bounds: SearchBounds) -> Tuple[Verdict, bool]:
    """Certificate-first verdict and whether the bounded search agrees with it."""
    hit = _scan(ONE_ABSORBING, ideal, bounds.degree, bounds.max_terms)
    certificate = None
    if ideal.is_zero or mono.is_generated_by_variables(ideal.payload):
        certificate = "prime ideal"
    elif mono.has_pure_powers(ideal.payload):
        certificate = "primary ideal"
    elif ML.is_prime_times_maximal(ideal):
        certificate = "product of a prime and the maximal ideal"

    if certificate is not None:
        agrees = hit is None
        if not agrees:
            logger.error(f"bounded search contradicts the certificate for {ideal}: {hit}")
        return Verdict.proven(Method.CERTIFICATE, note=certificate, bound=bounds.describe()), agrees
    if not _radical_is_prime(ideal):
        witness = hit or ML.one_absorbing_fallback(ideal)
        return Verdict.refuted(Method.FAST_PATH, witness, note="radical is not prime"), True
    if hit is not None:
        return Verdict.refuted(Method.ORACLE, hit), True
    return Verdict.unfalsified(bounds.describe()), True


def is_one_absorbing_primary(ideal: Ideal, bounds: Optional[SearchBounds] = None) -> Verdict:
    _require_proper(ideal)
    b = _bounds(bounds)
    if ideal.ring.backend == Backend.MON_LOC:
        return _monloc_one_absorbing(ideal, b)[0]
    return _oracle(ONE_ABSORBING, ideal, b)


def monloc_cross_check(ideal: Ideal, bounds: Optional[SearchBounds] = None) -> bool:
    """Whether the bounded search is consistent with the certified 1-absorbing verdict."""
    _require_proper(ideal)
    return _monloc_one_absorbing(ideal, _bounds(bounds))[1]


def is_two_absorbing_primary(ideal: Ideal, bounds: Optional[SearchBounds] = None) -> Verdict:
    """Quantifies over all elements, units included."""
    _require_proper(ideal)
    b = _bounds(bounds)
    if ideal.ring.backend != Backend.MON_LOC:
        return _oracle(TWO_ABSORBING_PRIMARY, ideal, b)
    if _radical_is_prime(ideal):
        return Verdict.proven(Method.CERTIFICATE, note="radical is prime")
    if is_one_absorbing_primary(ideal, b).holds:
        return Verdict.proven(Method.CERTIFICATE, note="1-absorbing primary")
    return _oracle(TWO_ABSORBING_PRIMARY, ideal, b)


def is_two_absorbing(ideal: Ideal, bounds: Optional[SearchBounds] = None) -> Verdict:
    _require_proper(ideal)
    b = _bounds(bounds)
    if ideal.ring.backend == Backend.MON_LOC and is_prime_ideal(ideal, b).holds:
        return Verdict.proven(Method.CERTIFICATE, note="prime ideal")
    return _oracle(TWO_ABSORBING, ideal, b)


def _primary_modulus(m: int) -> bool:
    return m == 0 or prime_power(m) is not None


def _split_modulus(ideal: Ideal) -> Tuple[Element, Element, Element]:
    """Nonunits ``(w, a, u)`` with ``w a u`` in ``mR`` but ``w a`` outside and ``u`` off the radical.

    ``u`` is the full power of the least prime of ``m`` and ``w = m / u``.
    """
    ring = ideal.ring
    m = ideal.modulus
    p = prime_factors(m)[0]
    u = p ** valuation(m, p)
    if ring.backend == Backend.ZMOD:
        one = 1
    else:
        one = nonunit_lift(ring, m, 1)
    return ring.element(m // u), ring.element(one), ring.element(u)


def fast_one_absorbing(ideal: Ideal) -> Verdict:
    """Closed-form 1-absorbing primary test for principal ideal domains, the DVR and products."""
    _require_proper(ideal)
    ring = ideal.ring
    backend = ring.backend
    if backend == Backend.INT_LOC:
        return Verdict.proven(Method.FAST_PATH, note="valuation domain")
    if backend in (Backend.INT, Backend.INT_INV):
        if _primary_modulus(ideal.modulus):
            return Verdict.proven(Method.FAST_PATH, note="prime power modulus")
        return Verdict.refuted(Method.FAST_PATH, _split_modulus(ideal))
    if backend != Backend.PROD:
        raise UnsupportedOperationError(f"no closed-form 1-absorbing test on {ring}")

    left, right = ideal.payload
    if left.is_proper and right.is_proper:
        return Verdict.refuted(
            Method.FAST_PATH,
            (ring.element((1, 0)), ring.element((1, 0)), ring.element((0, 1))),
            note="both components proper",
        )
    part = left if left.is_proper else right
    if _primary_modulus(part.modulus):
        return Verdict.proven(Method.FAST_PATH, note="primary component times the whole ring")
    w, _, u = _split_modulus(part)
    if part is left:
        witness = ((w.value, 0), (1, 0), (u.value, 0))
    else:
        witness = ((0, w.value), (0, 1), (0, u.value))
    return Verdict.refuted(Method.FAST_PATH, tuple(ring.element(x) for x in witness))


def has_fast_path(ideal: Ideal) -> bool:
    return ideal.ring.backend in (Backend.INT, Backend.INT_INV, Backend.INT_LOC, Backend.PROD)


def validate_witness(kind: str, ideal: Ideal, witness: Sequence[Element]) -> bool:
    """Re-check a refuting witness against raw membership and unit tests."""
    ring = ideal.ring
    if kind == MAXIMAL:
        return len(witness) == 1 and not contains(ideal, witness[0])
    if kind in (PRIME, PRIMARY):
        a, b = witness
        outside = not contains(ideal, b) if kind == PRIME else not radical_contains(ideal, b)
        return contains(ideal, a * b) and not contains(ideal, a) and outside
    a, b, c = witness
    if not contains(ideal, a * b * c) or contains(ideal, a * b):
        return False
    if kind == ONE_ABSORBING:
        nonunits = not any(is_unit(ring, w) for w in witness)
        return nonunits and not radical_contains(ideal, c)
    if kind == TWO_ABSORBING_PRIMARY:
        return not radical_contains(ideal, a * c) and not radical_contains(ideal, b * c)
    return not contains(ideal, a * c) and not contains(ideal, b * c)
