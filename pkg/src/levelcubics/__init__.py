"""Exact invariants of level-N structures on the Weierstrass family of cubics.

Congruence subgroup data, the singularity at the cusp point, trefoil
monodromy and Seifert fibrations, all in exact integer/rational arithmetic.
"""
from .arith import ModMatrix2, Rational, legendre, sl2_enumerate, sl2_order
from .config import EnumerationBoundError, enumeration_bound, enumeration_bound_override
from .congruence import (
    Kind,
    SubgroupSpec,
    coset_table,
    curve_invariants,
    cusps,
    deg_lambda,
    elliptic_counts,
    genus,
    index_psl2,
    index_sl2,
)
from .quotient import (
    blow_down,
    hirzebruch_jung,
    invariant_generators,
    resolution_graph,
    singularities,
    smoothness_verdict,
    zprime_self_intersection,
)
from .seifert import recognize, seifert_data
from .trefoil import BraidWord, braid_to_sl2, cover_over_K, fiber_set, monodromy_orbits

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "EnumerationBoundError", "Kind", "ModMatrix2", "Rational", "SubgroupSpec",
    "blow_down", "braid_to_sl2", "coset_table", "cover_over_K", "curve_invariants", "cusps",
    "deg_lambda", "elliptic_counts", "enumeration_bound", "enumeration_bound_override",
    "fiber_set", "genus", "hirzebruch_jung", "index_psl2", "index_sl2", "invariant_generators",
    "legendre", "monodromy_orbits", "recognize", "resolution_graph", "seifert_data",
    "singularities", "sl2_enumerate", "sl2_order", "smoothness_verdict",
    "zprime_self_intersection",
]
