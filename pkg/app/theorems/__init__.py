"""Theorem verifiers and certified constructions."""

from app.theorems.constructions import Construction, ConstructionReport, construct_PM, construct_xM
from app.theorems.ids import Scope, TheoremId, parse_theorem_ids
from app.theorems.report import VerificationReport, Violation
from app.theorems.verifiers import MUTATIONS, verify_theorem, verify_theorems

__all__ = [
    "MUTATIONS",
    "Construction",
    "ConstructionReport",
    "Scope",
    "TheoremId",
    "VerificationReport",
    "Violation",
    "construct_PM",
    "construct_xM",
    "parse_theorem_ids",
    "verify_theorem",
    "verify_theorems",
]
