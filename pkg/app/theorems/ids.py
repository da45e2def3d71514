"""
Theorem identifiers and verification scopes.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Tuple

from app.config import settings
from app.errors import ParseError, ScopeError


class TheoremId(str, Enum):
    """Results with an executable verifier."""

    IMPLICATION_CHAIN = "CHAIN"
    RADICAL_PRIME = "T-1"
    NOT_PRIMARY_FORCES_QUASILOCAL = "T0"
    NON_QUASILOCAL_EQUALS_PRIMARY = "T1"
    PRODUCT_FORM = "T1.5"
    PRIME_TIMES_MAXIMAL_ELEMENT = "T2"
    IRREDUCIBLE_FACTOR = "T3"
    PRIME_TIMES_MAXIMAL = "T4"
    COLON_PRIMARY = "T5"
    DIVIDED_EQUALS_PRIMARY = "T6"
    DIVIDED_DOMAIN_POWERS = "T8"
    VALUATION_DOMAIN = "T9"
    PRUFER_DOMAIN = "T10"
    DEDEKIND_RADICAL = "T11"
    DEDEKIND_POWERS = "T12i"
    PID_PRIME_POWERS = "C1"
    QUOTIENT_TRANSFER = "C2"
    SAME_RADICAL_INTERSECTION = "T13"
    IDEAL_ABSORPTION = "T16"
    IDEAL_TRIPLES = "T17"
    HOMOMORPHISM_TRANSFER = "T14"
    LOCALIZATION_TRANSFER = "T15"
    MONOMIAL_EXAMPLE = "EX-e1"
    INTEGER_EXAMPLE = "EX-e2"
    PRODUCT_EXAMPLE = "EX-prod"


# directions of a biconditional that quantify over every ring of a class
NON_EXECUTABLE = {
    TheoremId.DEDEKIND_POWERS: "the converse over all Noetherian domains is not checked",
}

FAMILIES = ("zmod", "prod", "int", "intloc", "intinv", "monloc")

# largest bounds the exhaustive verifiers accept
_LIMITS = {"zmod_max": 5000, "prod_max": 64, "int_max": 100_000, "local_exponent_max": 64, "monloc_degree": 8}


def parse_theorem_ids(text: str) -> List[TheoremId]:
    """Parse ``all`` or a comma separated list such as ``T1,C1,EX-e2``."""
    if text.strip().lower() == "all":
        return list(TheoremId)
    ids = []
    for token in text.split(","):
        token = token.strip()
        try:
            ids.append(TheoremId(token))
        except ValueError:
            raise ParseError("unknown theorem id", token=token) from None
    return ids


@dataclass(frozen=True)
class Scope:
    """Bounds of the rings and ideals a verifier instantiates.

    ``zmod_max`` bounds n for Z/n, ``prod_max`` both factors of Z/n x Z/m
    (and the moduli of Z x Z), ``int_max`` the moduli of Z and Z[1/s],
    ``local_exponent_max`` the exponents of quotient chains and of Z_(p),
    ``monloc_degree`` the generator degree of monomial ideals.
    """

    zmod_max: int
    prod_max: int
    int_max: int
    local_exponent_max: int
    monloc_degree: int
    families: Tuple[str, ...] = FAMILIES

    def __post_init__(self):
        for name, limit in _LIMITS.items():
            value = getattr(self, name)
            if value < 1 or value > limit:
                raise ScopeError(f"{name}={value} is outside the enumerable range 1..{limit}")
        unknown = [f for f in self.families if f not in FAMILIES]
        if unknown:
            raise ScopeError(f"unknown families {unknown}; expected a subset of {', '.join(FAMILIES)}")

    @classmethod
    def from_settings(
        cls, max_n: Optional[int] = None, families: Optional[Iterable[str]] = None
    ) -> "Scope":
        """Default scope; ``max_n`` overrides the Z/n and Z bounds."""
        return cls(
            zmod_max=max_n or settings.SCOPE_ZMOD_MAX,
            prod_max=settings.SCOPE_PROD_MAX,
            int_max=max_n or settings.SCOPE_INT_MAX,
            local_exponent_max=settings.SCOPE_LOCAL_EXPONENT_MAX,
            monloc_degree=settings.MONLOC_DEGREE_BOUND,
            families=tuple(families) if families else FAMILIES,
        )

    def includes(self, family: str) -> bool:
        return family in self.families

    def describe(self) -> str:
        parts = {
            "zmod": f"Z/n n<={self.zmod_max}",
            "prod": f"Z/n x Z/m n,m<={self.prod_max}",
            "int": f"Z moduli<={self.int_max}",
            "intloc": f"Zloc:p p in 2,3,5 exponents<={self.local_exponent_max}",
            "intinv": f"Zinv:s s in 2,3 moduli<={self.int_max}",
            "monloc": f"kxy degree<={self.monloc_degree}",
        }
        return "; ".join(parts[f] for f in FAMILIES if f in self.families)
