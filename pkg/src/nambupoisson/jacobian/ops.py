"""The polynomial algebra R[x, y, z] with pointwise product and Jacobian bracket."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from ..errors import InputError
from ..exactmath import MultiPoly, det3, parse_expr, to_poly

VARS = ("x", "y", "z")


def poly(text: str, env: dict | None = None) -> MultiPoly:
    """Parse a polynomial in x, y, z; parameters are looked up in ``env``."""
    return to_poly(parse_expr(text), VARS, env or {})


def _check_vars(*ps: MultiPoly) -> None:
    for p in ps:
        if p.variables != VARS:
            raise InputError(f"polynomials must be in variables {VARS}, got {p.variables}")


def jacobian_matrix(ps: Sequence[MultiPoly]) -> list[list[MultiPoly]]:
    return [[p.partial(v) for v in VARS] for p in ps]


def jacobian_bracket(f: MultiPoly, g: MultiPoly, h: MultiPoly) -> MultiPoly:
    """{f, g, h} = det(d(f, g, h) / d(x, y, z))."""
    _check_vars(f, g, h)
    return det3(jacobian_matrix((f, g, h)))


@dataclass(frozen=True)
class PolyMorphism:
    """The algebra endomorphism x -> P1, y -> P2, z -> P3."""

    images: tuple[MultiPoly, MultiPoly, MultiPoly]

    def __post_init__(self) -> None:
        if len(self.images) != 3:
            raise InputError("a morphism of R[x,y,z] needs exactly three images")
        _check_vars(*self.images)

    @classmethod
    def parse(cls, text: str, env: dict | None = None) -> "PolyMorphism":
        """From ``"P1; P2; P3"``."""
        parts = [p.strip() for p in text.split(";")]
        if len(parts) != 3 or not all(parts):
            raise InputError(f"expected three polynomials separated by ';', got {text!r}")
        return cls(tuple(poly(p, env) for p in parts))

    @classmethod
    def identity(cls) -> "PolyMorphism":
        return cls(tuple(MultiPoly.var(VARS, v) for v in VARS))

    def jacobian_det(self) -> MultiPoly:
        return det3(jacobian_matrix(self.images))

    def degree(self) -> int:
        return max(p.degree() for p in self.images)

    def __str__(self) -> str:
        return "; ".join(str(p) for p in self.images)


def substitute(m: PolyMorphism, f: MultiPoly) -> MultiPoly:
    """f(P1, P2, P3)."""
    _check_vars(f)
    return f.compose(m.images)


def twisted_ops(m: PolyMorphism, f: MultiPoly, g: MultiPoly, h: MultiPoly) -> dict[str, MultiPoly]:
    """mu_alpha(f, g) = alpha(f g) and bracket_alpha(f, g, h) = alpha({f, g, h})."""
    return {"mu_alpha": substitute(m, f * g), "bracket_alpha": substitute(m, jacobian_bracket(f, g, h))}


def chain_rule_holds(m: PolyMorphism, f: MultiPoly, g: MultiPoly, h: MultiPoly) -> bool:
    """alpha({f, g, h}) == {alpha f, alpha g, alpha h}."""
    lhs = substitute(m, jacobian_bracket(f, g, h))
    rhs = jacobian_bracket(substitute(m, f), substitute(m, g), substitute(m, h))
    return lhs == rhs


def monomials(max_degree: int) -> list[MultiPoly]:
    """All monic monomials of total degree <= max_degree, by degree then exponent order."""
    out = []
    for d in range(max_degree + 1):
        for e in sorted((e for e in product(range(d + 1), repeat=3) if sum(e) == d), reverse=True):
            out.append(MultiPoly.monomial(VARS, e))
    return out


def random_monomial(rng: random.Random, max_degree: int, coeff_range: int = 0) -> MultiPoly:
    """Uniform over monomials of degree <= max_degree; a non-zero integer coefficient if coeff_range > 0."""
    mono = rng.choice(monomials(max_degree))
    if coeff_range:
        c = 0
        while c == 0:
            c = rng.randint(-coeff_range, coeff_range)
        return mono * c
    return mono


@dataclass
class IdentityReport:
    trials: int
    max_degree: int
    checked: dict[str, int] = field(default_factory=dict)
    failures: dict[str, list[tuple[str, ...]]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "max_degree": self.max_degree,
            "checked": dict(self.checked),
            "failures": {k: [list(t) for t in v] for k, v in self.failures.items()},
            "status": "pass" if self.passed else "fail",
        }


def fundamental_identity_holds(f1, f2, f3, f4, f5) -> bool:
    br = jacobian_bracket
    lhs = br(f1, f2, br(f3, f4, f5))
    rhs = br(br(f1, f2, f3), f4, f5) + br(f3, br(f1, f2, f4), f5) + br(f3, f4, br(f1, f2, f5))
    return lhs == rhs


def leibniz_holds(f, g, f2, f3) -> bool:
    br = jacobian_bracket
    return br(f * g, f2, f3) == f * br(g, f2, f3) + br(f, f2, f3) * g


def skew_holds(f, g, h) -> bool:
    base = jacobian_bracket(f, g, h)
    return (
        jacobian_bracket(g, f, h) == -base
        and jacobian_bracket(h, g, f) == -base
        and jacobian_bracket(f, h, g) == -base
    )


def property_test_identities(trials: int = 100, max_degree: int = 3, seed: int = 1729) -> IdentityReport:
    """Fundamental identity, Leibniz rule and skew-symmetry on random monomial tuples."""
    if trials < 1:
        raise InputError("trials must be at least 1")
    rng = random.Random(f"{seed}:jacobian-identities")
    rep = IdentityReport(trials, max_degree)
    checks = (("fundamental", 5, fundamental_identity_holds), ("leibniz", 4, leibniz_holds), ("skew", 3, skew_holds))
    for name, arity, fn in checks:
        rep.checked[name] = 0
        rep.failures[name] = []
        for _ in range(trials):
            args = [random_monomial(rng, max_degree, coeff_range=5) for _ in range(arity)]
            rep.checked[name] += 1
            if not fn(*args):
                rep.failures[name].append(tuple(str(a) for a in args))
    return rep
