"""Local cohomology and classification of tetrahedral curves."""
from ._kernels import BACKEND
from .monomial_ideal import MonomialIdeal, contains, edge_power_ideal, intersect, tetra_ideal
from .s_module import SSet, enumerate_s, k_direct
from .takayama import h1_table, local_cohomology_dim
from .tetra import Classification, classify, diameter, is_acm, is_buchsbaum, normalize_star, script_a

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Classification",
    "MonomialIdeal",
    "SSet",
    "classify",
    "contains",
    "diameter",
    "edge_power_ideal",
    "enumerate_s",
    "h1_table",
    "intersect",
    "is_acm",
    "is_buchsbaum",
    "k_direct",
    "local_cohomology_dim",
    "normalize_star",
    "script_a",
    "tetra_ideal",
]
