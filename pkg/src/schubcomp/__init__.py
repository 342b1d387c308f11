"""Schubert polynomials, their monomial complements, and exhaustive checks.

The package computes Schubert polynomials exactly over the integers by
three independent constructions, forms complements x^mu f(1/x), decides
whether a polynomial is a Schubert polynomial, and sweeps every claim
about these operations over full symmetric groups at desk scale.
"""

from .complement import (
    NotAPolynomialError,
    complement,
    complement_delta,
    is_schubert,
    quotient_shift,
    staircase,
    w_star,
)
from .perm import (
    InvalidCodeError,
    all_perms,
    avoids,
    code_to_perm,
    complement_perm,
    conjugate,
    contains_pattern,
    inverse,
    inversion_code,
    parse_perm,
    parse_vec,
)
from .poly import Poly, ZeroPolynomialError, dumps, loads, pretty
from .rc import RCGraph, all_rc_graphs, ascii_render, bottom_rc, rc_weight, top_rc
from .schubert import schubert, schubert_bjs, schubert_dd, schubert_rc
from .verify import CLAIMS, SweepConfig, VerificationReport, run_claim

__all__ = [
    "CLAIMS",
    "InvalidCodeError",
    "NotAPolynomialError",
    "Poly",
    "RCGraph",
    "SweepConfig",
    "VerificationReport",
    "ZeroPolynomialError",
    "all_perms",
    "all_rc_graphs",
    "ascii_render",
    "avoids",
    "bottom_rc",
    "code_to_perm",
    "complement",
    "complement_delta",
    "complement_perm",
    "conjugate",
    "contains_pattern",
    "dumps",
    "inverse",
    "inversion_code",
    "is_schubert",
    "loads",
    "parse_perm",
    "parse_vec",
    "pretty",
    "quotient_shift",
    "rc_weight",
    "run_claim",
    "schubert",
    "schubert_bjs",
    "schubert_dd",
    "schubert_rc",
    "staircase",
    "top_rc",
    "w_star",
]
