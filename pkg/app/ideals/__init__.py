"""Ideals: representations, arithmetic and bounded families."""

from app.ideals.families import IdealFamily, enumerate_ideals, proper_ideals
from app.ideals.ideal import (
    Ideal,
    contains,
    maximal_ideal,
    parse_ideal,
    principal_ideal,
    whole_ring,
    zero_ideal,
)
from app.ideals.operations import (
    colon,
    ideal_elements,
    ideal_sum,
    in_zdiv,
    intersect,
    is_subideal,
    overideals,
    power,
    product,
    radical,
    radical_contains,
)

__all__ = [
    "Ideal",
    "IdealFamily",
    "colon",
    "contains",
    "enumerate_ideals",
    "ideal_elements",
    "ideal_sum",
    "in_zdiv",
    "intersect",
    "is_subideal",
    "maximal_ideal",
    "overideals",
    "parse_ideal",
    "power",
    "principal_ideal",
    "product",
    "proper_ideals",
    "radical",
    "radical_contains",
    "whole_ring",
    "zero_ideal",
]
