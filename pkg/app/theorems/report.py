"""
Verification reports.
"""

from typing import List, Optional

from pydantic import BaseModel, Field


class Violation(BaseModel):
    instance: str
    witness: Optional[str] = None


class VerificationReport(BaseModel):
    """Outcome of one verifier over one scope."""

    theorem: str
    scope: str
    instances_checked: int = 0
    violations: List[Violation] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    elapsed: Optional[float] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self, timings: bool = False) -> dict:
        exclude = None if timings else {"elapsed"}
        return self.model_dump(mode="json", exclude=exclude)

    def to_text(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        lines = [f"{self.theorem}: {self.instances_checked} instances, {status} [{self.scope}]"]
        lines += [f"  violation {v.instance}: {v.witness}" for v in self.violations]
        lines += [f"  note: {n}" for n in self.notes]
        if self.elapsed is not None:
            lines.append(f"  elapsed: {self.elapsed}s")
        return "\n".join(lines)
