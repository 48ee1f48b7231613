"""Newton maps of rational functions.

Core objects: Poly and RationalMap; newton_map and the fixed-point
machinery; conjugacy helpers; the exceptional-attractor classification;
basin dynamics; and the (z^(m+n) - lam)/z^n family.
"""

from .poly import Poly, poly_from_roots, roots
from .rational import INF, Mobius, RationalMap, is_infinity, maps_equal
from .newton import (
    characterize,
    exceptional_points,
    expected_degree,
    fixed_points,
    newton_map,
    residue_sum,
)
from .parsing import ParseError, parse_map

__all__ = [
    "Poly",
    "poly_from_roots",
    "roots",
    "INF",
    "Mobius",
    "RationalMap",
    "is_infinity",
    "maps_equal",
    "newton_map",
    "expected_degree",
    "fixed_points",
    "residue_sum",
    "characterize",
    "exceptional_points",
    "ParseError",
    "parse_map",
]

__version__ = "0.1.0"
