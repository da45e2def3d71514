"""
Three-valued results of the decision procedures.
"""

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, Optional, Sequence, Tuple

if TYPE_CHECKING:
    from app.rings.handles import Element


class Status(str, Enum):
    PROVEN = "proven"
    REFUTED = "refuted"
    UNFALSIFIED = "unfalsified"


class Method(str, Enum):
    ORACLE = "oracle"
    FAST_PATH = "fast-path"
    CERTIFICATE = "certificate"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one predicate on one ideal or element.

    A refuted verdict carries the witness tuple that violates the predicate;
    ``bound`` describes the search space when the answer is unfalsified.
    """

    status: Status
    method: Method
    witness: Tuple["Element", ...] = ()
    bound: Optional[str] = None
    note: Optional[str] = None

    @classmethod
    def proven(cls, method: Method, note: Optional[str] = None, bound: Optional[str] = None) -> "Verdict":
        return cls(Status.PROVEN, method, bound=bound, note=note)

    @classmethod
    def refuted(
        cls, method: Method, witness: Sequence["Element"] = (), note: Optional[str] = None
    ) -> "Verdict":
        return cls(Status.REFUTED, method, tuple(witness), note=note)

    @classmethod
    def unfalsified(cls, bound: str, method: Method = Method.ORACLE) -> "Verdict":
        return cls(Status.UNFALSIFIED, method, bound=bound)

    @property
    def holds(self) -> bool:
        return self.status == Status.PROVEN

    @property
    def is_refuted(self) -> bool:
        return self.status == Status.REFUTED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "witness": [str(w) for w in self.witness] if self.witness else None,
            "method": self.method.value,
            "bound": self.bound,
        }

    def __str__(self) -> str:
        text = self.status.value
        if self.witness:
            text += "(" + ", ".join(str(w) for w in self.witness) + ")"
        if self.bound:
            text += f"[{self.bound}]"
        return text
