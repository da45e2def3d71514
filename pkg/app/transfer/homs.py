"""
Ring homomorphisms of the supported catalogue: quotient maps Z -> Z/n and
Z/n -> Z/d, coordinate projections of a product, and identities.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from loguru import logger

from app.errors import BackendMismatchError, ParseError, PreconditionError
from app.ideals.ideal import Ideal, whole_ring, zero_ideal
from app.ideals.operations import is_subideal
from app.rings.handles import Backend, Element, RingHandle
from app.rings.parsing import parse_ring
from app.rings.residues import residue_system
from app.rings.structure import is_quasilocal, is_unit

_QUOTIENT = re.compile(r"^q:(.+)->(.+)$")
_PROJECTION = re.compile(r"^proj([12]):(.+)$")
_IDENTITY = re.compile(r"^id:(.+)$")


class HomKind(str, Enum):
    QUOTIENT = "quotient"
    PROJECTION = "projection"
    IDENTITY = "identity"


@dataclass(frozen=True)
class RingHom:
    """A surjective ring homomorphism from the catalogue.

    ``index`` is the coordinate (0 or 1) kept by a projection.
    """

    source: RingHandle
    target: RingHandle
    kind: HomKind
    index: int = 0

    def __post_init__(self):
        if self.kind == HomKind.QUOTIENT:
            if self.target.backend != Backend.ZMOD:
                raise ValueError(f"a quotient map must land in Z/n, got {self.target}")
            if self.source.backend == Backend.ZMOD:
                if self.source.param % self.target.param:
                    raise ValueError(f"{self.target.param} does not divide {self.source.param}")
            elif self.source.backend != Backend.INT:
                raise ValueError(f"quotient maps start at Z or Z/n, got {self.source}")
        elif self.kind == HomKind.PROJECTION:
            if self.source.backend != Backend.PROD:
                raise ValueError(f"{self.source} is not a product ring")
            if self.target != self.source.components[self.index]:
                raise ValueError(f"{self.target} is not factor {self.index + 1} of {self.source}")
        elif self.source != self.target:
            raise ValueError("an identity map needs equal source and target")

    @property
    def surjective(self) -> bool:
        return True

    @property
    def kernel(self) -> Ideal:
        if self.kind == HomKind.QUOTIENT:
            return Ideal(self.source, self.target.param)
        if self.kind == HomKind.PROJECTION:
            parts = [whole_ring(c) for c in self.source.components]
            parts[self.index] = zero_ideal(self.target)
            return Ideal(self.source, tuple(parts))
        return zero_ideal(self.source)

    def apply(self, x: Element) -> Element:
        if x.ring != self.source:
            raise BackendMismatchError(f"{x} belongs to {x.ring}, not {self.source}")
        if self.kind == HomKind.QUOTIENT:
            return self.target.element(x.value)
        if self.kind == HomKind.PROJECTION:
            return x.component(self.index)
        return x

    def to_dict(self) -> Dict[str, Any]:
        return {
            "hom": str(self),
            "source": str(self.source),
            "target": str(self.target),
            "kind": self.kind.value,
            "kernel": str(self.kernel),
        }

    def __str__(self) -> str:
        if self.kind == HomKind.QUOTIENT:
            return f"q:{self.source}->{self.target}"
        if self.kind == HomKind.PROJECTION:
            return f"proj{self.index + 1}:{self.source}"
        return f"id:{self.source}"


def quotient_map(source: RingHandle, target: RingHandle) -> RingHom:
    return RingHom(source, target, HomKind.QUOTIENT)


def projection(source: RingHandle, index: int) -> RingHom:
    return RingHom(source, source.components[index], HomKind.PROJECTION, index)


def identity(ring: RingHandle) -> RingHom:
    return RingHom(ring, ring, HomKind.IDENTITY)


def parse_hom(text: str) -> RingHom:
    """Parse ``q:Z->Z/12``, ``q:Z/8->Z/4``, ``proj1:Z/4xZ/9`` or ``id:Z/8``."""
    spec = text.strip()
    try:
        match = _QUOTIENT.match(spec)
        if match:
            return quotient_map(parse_ring(match.group(1)), parse_ring(match.group(2)))
        match = _PROJECTION.match(spec)
        if match:
            source = parse_ring(match.group(2))
            if source.backend != Backend.PROD:
                raise ParseError("projections need a product ring", token=match.group(2))
            return projection(source, int(match.group(1)) - 1)
        match = _IDENTITY.match(spec)
        if match:
            return identity(parse_ring(match.group(1)))
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(str(e), token=spec) from e
    raise ParseError("expected q:A->B, proj1:R, proj2:R or id:R", token=spec)


@dataclass(frozen=True)
class HomCheck:
    """Outcome of checking the hypotheses of the homomorphism transfer theorem."""

    identity_ok: bool
    nonunit_preserving: Optional[bool]
    branch: str
    witness: Optional[Element] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity_ok": self.identity_ok,
            "nonunit_preserving": self.nonunit_preserving,
            "branch": self.branch,
            "witness": None if self.witness is None else str(self.witness),
            "notes": list(self.notes),
        }


def _source_nonunits(f: RingHom) -> List[Element]:
    """Nonunits of the source that represent every class of the target, ascending."""
    source = f.source
    if source.is_finite:
        return [x for x in source.elements() if not is_unit(source, x)]
    if f.kind == HomKind.PROJECTION:
        # the idempotent of the kept coordinate is a nonunit mapping to 1
        unit_vector = [0, 0]
        unit_vector[f.index] = 1
        return [source.element(tuple(unit_vector))]
    classes = residue_system(source, f.target.param)
    return sorted((r for r in classes.representatives if r is not None), key=lambda r: r.value)


def check_hom_hypotheses(f: RingHom) -> HomCheck:
    """Check ``f(1) = 1`` and, for a quasilocal target, that nonunits map to nonunits.

    The identity preserves nonunits on any ring.
    """
    identity_ok = f.apply(f.source.one()) == f.target.one()
    quasilocal = is_quasilocal(f.target)
    branch = "quasilocal-target" if quasilocal else "non-quasilocal-target (primary route)"
    if f.kind == HomKind.IDENTITY:
        return HomCheck(identity_ok, True, branch)
    if not quasilocal:
        logger.debug(f"{f}: target is not quasilocal, nonunit preservation not required")
        return HomCheck(identity_ok, None, branch, notes=["target is not quasilocal"])

    for x in _source_nonunits(f):
        image = f.apply(x)
        if is_unit(f.target, image):
            note = f"{x} is a nonunit of {f.source} mapping to the unit {image} of {f.target}"
            logger.debug(f"{f}: {note}")
            return HomCheck(identity_ok, False, branch, x, [note])
    return HomCheck(identity_ok, True, branch)


def _require_target(f: RingHom, ideal: Ideal) -> None:
    if ideal.ring != f.target:
        raise BackendMismatchError(f"{ideal} is not an ideal of {f.target}")


def preimage_ideal(f: RingHom, ideal: Ideal) -> Ideal:
    """The contraction ``f^-1(J)``."""
    _require_target(f, ideal)
    if f.kind == HomKind.QUOTIENT:
        return Ideal(f.source, ideal.modulus)
    if f.kind == HomKind.PROJECTION:
        parts = [whole_ring(c) for c in f.source.components]
        parts[f.index] = ideal
        return Ideal(f.source, tuple(parts))
    return ideal


def image_ideal(f: RingHom, ideal: Ideal) -> Ideal:
    """The image ``f(I)`` of an ideal containing the kernel.

    Raises:
        PreconditionError: when ``f`` is not surjective or the kernel is not inside ``I``
    """
    if ideal.ring != f.source:
        raise BackendMismatchError(f"{ideal} is not an ideal of {f.source}")
    if not f.surjective:
        raise PreconditionError("not-surjective", f"{f} is not surjective")
    if not is_subideal(f.kernel, ideal):
        raise PreconditionError(
            "kernel-not-contained", f"kernel {f.kernel} of {f} is not contained in {ideal}"
        )
    if f.kind == HomKind.QUOTIENT:
        return Ideal(f.target, ideal.modulus)
    if f.kind == HomKind.PROJECTION:
        return ideal.component(f.index)
    return ideal
