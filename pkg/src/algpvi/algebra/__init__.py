"""Exact arithmetic tower: Q(i) -> polynomials -> rational functions ->
quadratic extensions, plus the shared expression grammar."""

from .gaussian import GaussRational
from .polys import QQI, UniPoly, poly_gcd, squarefree_decomposition
from .ratfunc import FracField, RatFunc
from .extension import ExtScalar, QuadExt
from .exprparse import ExprSyntaxError, parse_expression, parse_rational

__all__ = [
    "GaussRational",
    "QQI",
    "UniPoly",
    "poly_gcd",
    "squarefree_decomposition",
    "FracField",
    "RatFunc",
    "ExtScalar",
    "QuadExt",
    "ExprSyntaxError",
    "parse_expression",
    "parse_rational",
]
