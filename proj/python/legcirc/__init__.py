"""Exact Legendrian polygons in RP^3 and their co-oriented circular curves.

Rationals go in as int, fractions.Fraction or "p/q" strings and come back
as Fraction.
"""

from ._legcirc import (
    LegcircError,
    Polygon,
    flags_to_polygon,
    maslov_index,
    osculating_circle,
    parametrize_positive_triple,
    sample_positive_tuple,
    segment_pair_nonincident,
    symplectic_product,
    tuple_positive,
)

__all__ = [
    "LegcircError",
    "Polygon",
    "flags_to_polygon",
    "maslov_index",
    "osculating_circle",
    "parametrize_positive_triple",
    "sample_positive_tuple",
    "segment_pair_nonincident",
    "symplectic_product",
    "tuple_positive",
]
