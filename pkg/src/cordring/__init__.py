"""Degree-zero knot contact homology (cord rings) of knots and braids."""

from .braid import BraidWord, parse_braid
from .invariants import Presentation, hc0_braid, hc0_closure, hc0_diagram, hc0_plat
from .abelian import canonical_ring, rings_equivalent
from .pd import PdCode, parse_pd

__all__ = [
    "BraidWord",
    "parse_braid",
    "Presentation",
    "hc0_braid",
    "hc0_closure",
    "hc0_diagram",
    "hc0_plat",
    "canonical_ring",
    "rings_equivalent",
    "PdCode",
    "parse_pd",
]
