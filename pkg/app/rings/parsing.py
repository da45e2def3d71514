"""
Parsers for the ring and element mini-language.

Ring specs: ``Z``, ``Z/12``, ``Z/4xZ/9``, ``ZxZ``, ``Zloc:5``, ``Zinv:2``, ``kxy``.
Element literals: integers, pairs ``(a,b)``, rationals ``a/b``, ``p`` or
``p^k`` for the prime of ``Zloc``, and polynomials in ``x, y``.
"""

import re
from fractions import Fraction

from app.errors import ParseError
from app.rings import handles as H
from app.rings import poly as P
from app.rings.handles import Backend, Element, RingHandle

_FACTOR = re.compile(r"^(Z)(?:/(\d+))?$")
_LOC = re.compile(r"^Zloc:(\d+)$")
_INV = re.compile(r"^Zinv:(\d+)$")
_INT = re.compile(r"^[+-]?\d+$")
_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_PRIME_POWER = re.compile(r"^p(?:\^(\d+))?$")


def _factor(token: str) -> RingHandle:
    match = _FACTOR.match(token)
    if not match:
        raise ParseError("unknown ring factor", token=token)
    if match.group(2) is None:
        return H.integers()
    try:
        return H.zmod(int(match.group(2)))
    except ValueError as e:
        raise ParseError(str(e), token=token) from e


def parse_ring(text: str) -> RingHandle:
    """Parse a ring spec string into a ``RingHandle``."""
    spec = text.strip()
    if not spec:
        raise ParseError("empty ring spec", token=text)
    if spec == "kxy":
        return H.mon_loc()
    for pattern, build in ((_LOC, H.int_loc), (_INV, H.int_inv)):
        match = pattern.match(spec)
        if match:
            try:
                return build(int(match.group(1)))
            except ValueError as e:
                raise ParseError(str(e), token=spec) from e
    if "x" in spec:
        parts = spec.split("x")
        if len(parts) != 2:
            raise ParseError("a product ring has exactly two factors", token=spec)
        return H.prod(_factor(parts[0]), _factor(parts[1]))
    return _factor(spec)


def parse_element(ring: RingHandle, text: str) -> Element:
    """Parse an element literal of ``ring``."""
    token = text.strip()
    backend = ring.backend
    try:
        if backend in (Backend.ZMOD, Backend.INT):
            if not _INT.match(token):
                raise ParseError(f"expected an integer for {ring}", token=token)
            return ring.element(int(token))
        if backend == Backend.PROD:
            inner = token[1:-1] if token.startswith("(") and token.endswith(")") else None
            parts = inner.split(",") if inner is not None else []
            if len(parts) != 2:
                raise ParseError("expected a pair (a,b)", token=token)
            left, right = ring.components
            a = parse_element(left, parts[0])
            b = parse_element(right, parts[1])
            return ring.element((a.value, b.value))
        if backend == Backend.INT_LOC:
            match = _PRIME_POWER.match(token)
            if match:
                return ring.element(ring.param ** int(match.group(1) or 1))
        if backend in (Backend.INT_LOC, Backend.INT_INV):
            if not _RATIONAL.match(token):
                raise ParseError(f"expected an integer or rational for {ring}", token=token)
            return ring.element(Fraction(token))
        num, den = P.parse_fraction(token)
        return ring.element((num, den))
    except ParseError:
        raise
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(str(e), token=token) from e
