"""Ring homomorphisms, quotients and localizations."""

from app.transfer.homs import (
    HomCheck,
    HomKind,
    RingHom,
    check_hom_hypotheses,
    identity,
    image_ideal,
    parse_hom,
    preimage_ideal,
    projection,
    quotient_map,
)
from app.transfer.localization import (
    LocalizationSpec,
    Localized,
    MultSetKind,
    complement_of,
    localize,
    parse_localization,
    powers_of,
)

__all__ = [
    "HomCheck",
    "HomKind",
    "LocalizationSpec",
    "Localized",
    "MultSetKind",
    "RingHom",
    "check_hom_hypotheses",
    "complement_of",
    "identity",
    "image_ideal",
    "localize",
    "parse_hom",
    "parse_localization",
    "powers_of",
    "preimage_ideal",
    "projection",
    "quotient_map",
]
