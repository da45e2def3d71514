"""Decision procedures, classification reports and family scans."""

from app.classify.monloc_search import SearchBounds
from app.classify.predicates import (
    fast_one_absorbing,
    is_maximal_ideal,
    is_one_absorbing_primary,
    is_primary,
    is_prime_ideal,
    is_two_absorbing,
    is_two_absorbing_primary,
)
from app.classify.report import ClassificationReport, classify_report
from app.classify.table import family_ideals, scan_family

__all__ = [
    "ClassificationReport",
    "SearchBounds",
    "classify_report",
    "family_ideals",
    "fast_one_absorbing",
    "is_maximal_ideal",
    "is_one_absorbing_primary",
    "is_primary",
    "is_prime_ideal",
    "is_two_absorbing",
    "is_two_absorbing_primary",
    "scan_family",
]
