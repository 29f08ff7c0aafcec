"""Exact scalar, polynomial, expression and linear-algebra substrate."""

from .expr import (
    BinOp,
    Expr,
    ExprSyntaxError,
    Name,
    Neg,
    NonPolynomialError,
    Num,
    Pow,
    eval_text,
    evaluate,
    names,
    parse_expr,
    substitute,
    to_poly,
    to_text,
)
from .linalg import RationalMatrix, bareiss_det, in_span, nullspace
from .poly import MultiPoly, det3, poly_arith, poly_partial, polys
from .rational import ONE, ZERO, Rational, format_rational, rat, rat_arith

__all__ = [
    "BinOp", "Expr", "ExprSyntaxError", "MultiPoly", "Name", "Neg", "NonPolynomialError", "Num",
    "ONE", "Pow", "Rational", "RationalMatrix", "ZERO", "bareiss_det", "det3", "eval_text",
    "evaluate", "format_rational", "in_span", "names", "nullspace", "parse_expr", "poly_arith",
    "poly_partial", "polys", "rat", "rat_arith", "substitute", "to_poly", "to_text",
]
