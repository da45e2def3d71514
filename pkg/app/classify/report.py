"""
Classification reports aggregating every predicate for one ideal.
"""

from typing import List, Optional

from loguru import logger
from pydantic import BaseModel

from app.classify import predicates as PR
from app.classify.monloc_search import SearchBounds
from app.errors import NotProperError
from app.ideals.ideal import Ideal
from app.ideals.operations import radical
from app.rings.handles import Backend
from app.verdict import Verdict


class PropertyVerdict(BaseModel):
    status: str
    witness: Optional[List[str]] = None
    method: str
    bound: Optional[str] = None

    @classmethod
    def from_verdict(cls, verdict: Verdict) -> "PropertyVerdict":
        return cls(**verdict.to_dict())


class Properties(BaseModel):
    prime: PropertyVerdict
    maximal: PropertyVerdict
    primary: PropertyVerdict
    one_absorbing_primary: PropertyVerdict
    two_absorbing_primary: PropertyVerdict
    two_absorbing: PropertyVerdict


class ClassificationReport(BaseModel):
    """All six verdicts for one proper ideal, plus its radical."""

    ring: str
    ideal: str
    radical: str
    properties: Properties
    agreement: bool

    def to_text(self) -> str:
        parts = [f"{name}={_short(v)}" for name, v in self.properties]
        flag = "" if self.agreement else " DISAGREEMENT"
        return f"{self.ring} {self.ideal}: radical={self.radical} " + " ".join(parts) + flag


def _short(verdict: PropertyVerdict) -> str:
    text = verdict.status
    if verdict.witness:
        text += "(" + ",".join(verdict.witness) + ")"
    return text


def agreement(ideal: Ideal, one_absorbing: Verdict, bounds: Optional[SearchBounds] = None) -> bool:
    """Whether the closed form (or certificate) and the oracle (or bounded search) agree."""
    if ideal.ring.backend == Backend.MON_LOC:
        return PR.monloc_cross_check(ideal, bounds)
    if not PR.has_fast_path(ideal):
        return True
    fast = PR.fast_one_absorbing(ideal)
    if fast.status != one_absorbing.status:
        logger.error(f"fast path {fast} and oracle {one_absorbing} disagree on {ideal} in {ideal.ring}")
        return False
    return True


def classify_report(ideal: Ideal, bounds: Optional[SearchBounds] = None) -> ClassificationReport:
    """Run every predicate on a proper ideal.

    Raises:
        NotProperError: for the whole ring
    """
    if not ideal.is_proper:
        raise NotProperError(f"{ideal} is the whole ring of {ideal.ring}")

    verdicts = {
        "prime": PR.is_prime_ideal(ideal, bounds),
        "maximal": PR.is_maximal_ideal(ideal),
        "primary": PR.is_primary(ideal, bounds),
        "one_absorbing_primary": PR.is_one_absorbing_primary(ideal, bounds),
        "two_absorbing_primary": PR.is_two_absorbing_primary(ideal, bounds),
        "two_absorbing": PR.is_two_absorbing(ideal, bounds),
    }
    logger.info(f"classified {ideal} in {ideal.ring}")
    return ClassificationReport(
        ring=str(ideal.ring),
        ideal=str(ideal),
        radical=str(radical(ideal)),
        properties=Properties(**{k: PropertyVerdict.from_verdict(v) for k, v in verdicts.items()}),
        agreement=agreement(ideal, verdicts["one_absorbing_primary"], bounds),
    )
