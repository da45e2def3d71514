"""
Family sweeps: one classification row per (ring, ideal).
"""

from typing import Dict, List, Optional, Tuple

import pandas as pd
from loguru import logger

from app.classify.monloc_search import SearchBounds
from app.classify.report import classify_report
from app.config import settings
from app.errors import ScopeError
from app.ideals.families import IdealFamily, enumerate_ideals
from app.ideals.ideal import Ideal
from app.ideals.operations import radical
from app.rings import handles as H

COLUMNS = [
    "ring",
    "ideal",
    "radical",
    "prime",
    "maximal",
    "primary",
    "one_abs",
    "two_abs_primary",
    "two_abs",
    "method",
]

_FLAGS = {
    "prime": "prime",
    "maximal": "maximal",
    "primary": "primary",
    "one_abs": "one_absorbing_primary",
    "two_abs_primary": "two_absorbing_primary",
    "two_abs": "two_absorbing",
}

_STATUS = {"proven": "true", "refuted": "false", "unfalsified": "unfalsified"}

FAMILIES = ("zmod", "int", "prod", "intloc", "monloc")


def family_ideals(
    family: str,
    n_range: Optional[Tuple[int, int]] = None,
    left: Optional[int] = None,
    right: Optional[int] = None,
    degree: Optional[int] = None,
    prime: Optional[int] = None,
) -> List[Ideal]:
    """Ideals of a named family in canonical order.

    Raises:
        ScopeError: when the bounds needed by the family are missing
    """
    if family == "zmod":
        if n_range is None:
            raise ScopeError("the zmod family needs --n-range")
        lo, hi = n_range
        return [i for n in range(max(lo, 2), hi + 1) for i in enumerate_ideals(IdealFamily(H.zmod(n)))]
    if family == "int":
        if n_range is None:
            raise ScopeError("the int family needs --n-range")
        return enumerate_ideals(IdealFamily(H.integers(), modulus_range=n_range))
    if family == "prod":
        if left is None or right is None:
            raise ScopeError("the prod family needs --left and --right")
        return enumerate_ideals(IdealFamily(H.prod(H.zmod(left), H.zmod(right))))
    if family == "intloc":
        ring = H.int_loc(prime or 5)
        return enumerate_ideals(IdealFamily(ring, exponent_max=settings.SCOPE_LOCAL_EXPONENT_MAX))
    if family == "monloc":
        if degree is None:
            raise ScopeError("the monloc family needs --degree")
        return enumerate_ideals(IdealFamily(H.mon_loc(), degree=degree))
    raise ScopeError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def _row(ideal: Ideal, bounds: Optional[SearchBounds]) -> Dict[str, str]:
    row = {"ring": str(ideal.ring), "ideal": str(ideal), "radical": str(radical(ideal))}
    if not ideal.is_proper:
        row.update({column: "false" for column in _FLAGS})
        row["method"] = "none"
        return row
    report = classify_report(ideal, bounds)
    props = report.properties
    for column, field in _FLAGS.items():
        row[column] = _STATUS[getattr(props, field).status]
    row["method"] = props.one_absorbing_primary.method
    return row


def scan_family(ideals: List[Ideal], bounds: Optional[SearchBounds] = None) -> pd.DataFrame:
    """Classification table with the fixed column order, rows in input order."""
    rows = [_row(i, bounds) for i in ideals]
    logger.info(f"scanned {len(rows)} ideals")
    return pd.DataFrame(rows, columns=COLUMNS)


def to_csv(table: pd.DataFrame) -> str:
    return table.to_csv(index=False, lineterminator="\n")


def to_json(table: pd.DataFrame) -> str:
    return table.to_json(orient="records") + "\n"
