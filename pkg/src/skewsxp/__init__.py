"""Schur expansions of s_tau (s_{lam/mu} o p_r) via ribbon tableaux, r-quotients
and a sign-reversing involution on multitableaux."""

from .abacus import r_core, r_quotient, sgn_r, skew_quotient, star
from .coplactic import E, F, G, S, is_latticed, lr_coefficient
from .partitions import SkewShape, skew
from .ribbon import enumerate_ribbon_tableaux
from .symfunc import SchurExpansion, oracle_product_plethysm
from .sxp import pipeline_trace, sxp_classic, sxp_direct, sxp_expand

__version__ = "0.1.0"

__all__ = [
    "E", "F", "G", "S", "SchurExpansion", "SkewShape", "enumerate_ribbon_tableaux", "is_latticed",
    "lr_coefficient", "oracle_product_plethysm", "pipeline_trace", "r_core", "r_quotient", "sgn_r",
    "skew", "skew_quotient", "star", "sxp_classic", "sxp_direct", "sxp_expand",
]
