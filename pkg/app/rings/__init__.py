"""Ring backends, canonical elements and ring-level structure."""

from app.rings.handles import (
    Backend,
    Element,
    RingHandle,
    int_inv,
    int_loc,
    integers,
    mon_loc,
    prod,
    zmod,
)
from app.rings.parsing import parse_element, parse_ring
from app.rings.residues import ResidueSystem, residue_system
from app.rings.structure import (
    divides,
    is_chained,
    is_divided,
    is_irreducible_element,
    is_prime_element,
    is_quasilocal,
    is_unit,
    nonunits_closed_under_addition,
    quasilocal_witness,
)

__all__ = [
    "Backend",
    "Element",
    "ResidueSystem",
    "RingHandle",
    "divides",
    "int_inv",
    "int_loc",
    "integers",
    "is_chained",
    "is_divided",
    "is_irreducible_element",
    "is_prime_element",
    "is_quasilocal",
    "is_unit",
    "mon_loc",
    "nonunits_closed_under_addition",
    "parse_element",
    "parse_ring",
    "prod",
    "quasilocal_witness",
    "residue_system",
    "zmod",
]
