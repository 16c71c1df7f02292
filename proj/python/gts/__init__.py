"""Osculating-polynomial and multipoint-Pade approximation toolkit.

Thin Python layer over the C++ core: expression parsing, jet (truncated
Taylor) differentiation, osculating interpolation with explicit remainder
bounds, Rolle zero-counting diagnostics, and rational approximation, in
exact-rational or float arithmetic.
"""

from ._core import (
    DegenerateTableError,
    EvalDomainError,
    Expr,
    ExprSyntaxError,
    GtsError,
    NodeSet,
    Osculant,
    PoleAtNodeError,
    PoleError,
    RationalApproximant,
    WitnessNotBracketedError,
    build_modulus,
    c_witness,
    derivative_at,
    derivative_range,
    jet,
    osculate,
    osculate_values,
    parse,
    rational_fit,
    rational_remainder_bound,
    sigma,
    singular_limit,
    spectral_basis,
    taylor_value_with_bound,
    verify_congruence,
    verify_rolle_numeric,
    zero_count_table,
)

__all__ = [
    "DegenerateTableError",
    "EvalDomainError",
    "Expr",
    "ExprSyntaxError",
    "GtsError",
    "NodeSet",
    "Osculant",
    "PoleAtNodeError",
    "PoleError",
    "RationalApproximant",
    "WitnessNotBracketedError",
    "build_modulus",
    "c_witness",
    "derivative_at",
    "derivative_range",
    "jet",
    "osculate",
    "osculate_values",
    "parse",
    "rational_fit",
    "rational_remainder_bound",
    "sigma",
    "singular_limit",
    "spectral_basis",
    "taylor_value_with_bound",
    "verify_congruence",
    "verify_rolle_numeric",
    "zero_count_table",
]
