"""Coefficient expressions: parsing, printing, exact evaluation.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor | factor)*     # juxtaposition multiplies
    factor := atom ('^' uint)*                           # right-associative
    atom   := uint | ident | '(' expr ')' | '-' atom

Unary minus applies to an atom, so ``-x^2`` is ``(-x)^2``.  Integer literals
are non-negative; ``-3`` is the negation of ``3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

from ..errors import DomainError, InputError
from .poly import MultiPoly


class ExprSyntaxError(InputError):
    def __init__(self, message: str, text: str, offset: int) -> None:
        super().__init__(f"{message} at byte {offset} in {text!r}")
        self.text = text
        self.offset = offset


class NonPolynomialError(InputError):
    """Raised when an expression divides by a non-constant polynomial."""


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Name, Neg, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos
            while start < n and text[start].isspace():
                start += 1
            raise ExprSyntaxError(f"unexpected character {text[start]!r}", text, _byte_offset(text, start))
        kind = "int" if m.group(1) else "ident" if m.group(2) else "op"
        tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: tuple[str, str, int]) -> ExprSyntaxError:
        return ExprSyntaxError(message, self.text, _byte_offset(self.text, tok[2]))

    def parse(self) -> Expr:
        if self.peek()[0] == "end":
            raise self.error("empty expression", self.peek())
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {tok[1]!r}", tok)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                node = BinOp(val, node, self.factor())
            elif kind in ("int", "ident") or (kind == "op" and val == "("):
                node = BinOp("*", node, self.factor())
            else:
                return node

    def factor(self) -> Expr:
        base = self.atom()
        exps = []
        while self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise self.error("exponent must be a non-negative integer", tok)
            exps.append(int(tok[1]))
        if not exps:
            return base
        e = exps[-1]
        for k in reversed(exps[:-1]):
            e = k ** e
        return Pow(base, e)

    def atom(self) -> Expr:
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return Num(int(val))
        if kind == "ident":
            return Name(val)
        if kind == "op" and val == "(":
            node = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise self.error("expected ')'", close)
            return node
        if kind == "op" and val == "-":
            return Neg(self.atom())
        if kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {val!r}", tok)


@lru_cache(maxsize=4096)
def parse_expr(text: str) -> Expr:
    """Parse ``text``; raises ExprSyntaxError carrying the byte offset."""
    if not isinstance(text, str):
        raise InputError(f"expression must be a string, got {type(text).__name__}")
    return _Parser(text).parse()


# printing

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(node: Expr) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Pow):
        return 3
    return 4


def to_text(node: Expr) -> str:
    """Render with the minimal parentheses needed to parse back to the same tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Neg):
        inner = to_text(node.operand)
        return "-" + (inner if _prec(node.operand) == 4 else f"({inner})")
    if isinstance(node, Pow):
        inner = to_text(node.base)
        if not isinstance(node.base, (Num, Name)):
            inner = f"({inner})"
        return f"{inner}^{node.exponent}"
    p = _PREC[node.op]
    left = to_text(node.left)
    if _prec(node.left) < p:
        left = f"({left})"
    right = to_text(node.right)
    if _prec(node.right) <= p:
        right = f"({right})"
    return f"{left} {node.op} {right}"


# evaluation

def evaluate(node: Expr, env: Mapping[str, Fraction]) -> Fraction:
    """Exact value at ``env``; unknown names raise InputError, zero divisors DomainError."""
    if isinstance(node, Num):
        return Fraction(node.value)
    if isinstance(node, Name):
        try:
            return Fraction(env[node.name])
        except KeyError:
            raise InputError(f"unknown identifier {node.name!r}") from None
    if isinstance(node, Neg):
        return -evaluate(node.operand, env)
    if isinstance(node, Pow):
        return evaluate(node.base, env) ** node.exponent
    left = evaluate(node.left, env)
    right = evaluate(node.right, env)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right == 0:
        raise DomainError(f"division by zero in {to_text(node)!r}", left, right)
    return left / right


def eval_text(text: str, env: Mapping[str, Fraction] | None = None) -> Fraction:
    return evaluate(parse_expr(text), env or {})


def to_poly(node: Expr, variables: Sequence[str], env: Mapping[str, Fraction]) -> MultiPoly:
    """Interpret ``node`` as a polynomial in ``variables`` with parameters from ``env``.

    Division is only allowed by expressions that evaluate to non-zero constants.
    """
    variables = tuple(variables)
    if isinstance(node, Num):
        return MultiPoly.constant(variables, node.value)
    if isinstance(node, Name):
        if node.name in variables:
            return MultiPoly.var(variables, node.name)
        if node.name in env:
            return MultiPoly.constant(variables, Fraction(env[node.name]))
        raise InputError(f"unknown identifier {node.name!r}")
    if isinstance(node, Neg):
        return -to_poly(node.operand, variables, env)
    if isinstance(node, Pow):
        return to_poly(node.base, variables, env) ** node.exponent
    left = to_poly(node.left, variables, env)
    right = to_poly(node.right, variables, env)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if not right.is_constant():
        raise NonPolynomialError(f"division by non-constant {right} in {to_text(node)!r}")
    divisor = right.constant_value()
    if divisor == 0:
        raise DomainError(f"division by zero in {to_text(node)!r}", left, divisor)
    return left * (1 / divisor)


def names(node: Expr) -> set[str]:
    if isinstance(node, Num):
        return set()
    if isinstance(node, Name):
        return {node.name}
    if isinstance(node, Neg):
        return names(node.operand)
    if isinstance(node, Pow):
        return names(node.base)
    return names(node.left) | names(node.right)


def substitute(node: Expr, mapping: Mapping[str, Expr]) -> Expr:
    """Replace names by expressions (no simplification)."""
    if isinstance(node, Num):
        return node
    if isinstance(node, Name):
        return mapping.get(node.name, node)
    if isinstance(node, Neg):
        return Neg(substitute(node.operand, mapping))
    if isinstance(node, Pow):
        return Pow(substitute(node.base, mapping), node.exponent)
    return BinOp(node.op, substitute(node.left, mapping), substitute(node.right, mapping))
