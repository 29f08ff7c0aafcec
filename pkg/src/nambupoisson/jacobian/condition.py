"""The unimodularity condition det(dP_i/dx_j) = 1 for twisting R[x, y, z]."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Union

from ..core.sampling import DEFAULT_SAMPLES, DEFAULT_SEED, MAX_RESAMPLES, draw, sample_rng
from ..errors import DomainError, InadmissibleSample, InputError
from ..exactmath import MultiPoly, NonPolynomialError, format_rational, names, parse_expr, to_poly
from .ops import VARS, PolyMorphism, chain_rule_holds, monomials

PASS = "PASS"
FAIL = "FAIL"


@dataclass(frozen=True)
class ParametricPolyMorphism:
    """Images P1, P2, P3 as expression strings over x, y, z and named parameters."""

    texts: tuple[str, str, str]

    def __post_init__(self) -> None:
        if len(self.texts) != 3:
            raise InputError("a morphism of R[x,y,z] needs exactly three images")
        for t in self.texts:
            parse_expr(t)

    @classmethod
    def parse(cls, text: str) -> "ParametricPolyMorphism":
        parts = [p.strip() for p in text.split(";")]
        if len(parts) != 3 or not all(parts):
            raise InputError(f"expected three polynomials separated by ';', got {text!r}")
        return cls(tuple(parts))

    @property
    def parameters(self) -> tuple[str, ...]:
        found: set[str] = set()
        for t in self.texts:
            found |= names(parse_expr(t))
        return tuple(sorted(found - set(VARS)))

    def instantiate(self, env: Mapping[str, Fraction] | None = None) -> PolyMorphism:
        """Concrete morphism; a vanishing constant divisor raises InadmissibleSample."""
        env = dict(env or {})
        try:
            return PolyMorphism(tuple(to_poly(parse_expr(t), VARS, env) for t in self.texts))
        except NonPolynomialError:
            raise
        except DomainError as exc:
            if isinstance(exc, InadmissibleSample):
                raise
            raise InadmissibleSample(str(exc), *exc.operands) from None

    def __str__(self) -> str:
        return "; ".join(self.texts)


Morphism = Union[PolyMorphism, ParametricPolyMorphism]


@dataclass
class ConditionReport:
    verdict: str
    det: MultiPoly | None = None  # symbolic determinant (concrete input only)
    samples: list[tuple[dict[str, Fraction], MultiPoly]] = field(default_factory=list)
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.det is not None:
            out["det"] = str(self.det)
        if self.samples:
            out["samples"] = [
                {"assignment": {k: format_rational(v) for k, v in sorted(a.items())}, "det": str(d)}
                for a, d in self.samples
            ]
        if self.reason:
            out["reason"] = self.reason
        return out


def _is_one(p: MultiPoly) -> bool:
    return p.is_constant() and p.constant_value() == 1


def sample_morphisms(
    m: ParametricPolyMorphism, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, stream: str = ""
) -> list[tuple[dict[str, Fraction], PolyMorphism]]:
    """Admissible samples; at most MAX_RESAMPLES rejections per sample."""
    params = m.parameters
    if not params:
        return [({}, m.instantiate({}))]
    rng = sample_rng(seed, stream or str(m))
    out = []
    for _ in range(samples):
        for _attempt in range(MAX_RESAMPLES + 1):
            a = draw(rng, params)
            try:
                out.append((a, m.instantiate(a)))
                break
            except InadmissibleSample:
                continue
        else:
            raise InadmissibleSample(f"no admissible sample found for {m}")
    return out


def check_morphism_condition(
    m: Morphism, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, stream: str = ""
) -> ConditionReport:
    """PASS iff det(dP_i/dx_j) - 1 vanishes (symbolically, or at every sample for parameters)."""
    if isinstance(m, ParametricPolyMorphism) and not m.parameters:
        m = m.instantiate({})
    if isinstance(m, PolyMorphism):
        det = m.jacobian_det()
        return ConditionReport(PASS if _is_one(det) else FAIL, det=det)
    try:
        pairs = sample_morphisms(m, samples, seed, stream)
    except NonPolynomialError as exc:
        return ConditionReport(FAIL, reason=f"not a polynomial map: {exc}")
    rep = ConditionReport(PASS)
    for a, pm in pairs:
        det = pm.jacobian_det()
        rep.samples.append((a, det))
        if not _is_one(det) and rep.verdict == PASS:
            rep.verdict = FAIL
            rep.reason = f"det = {det} at sample {len(rep.samples)}"
    return rep


def chain_rule_witness(m: PolyMorphism, max_degree: int = 2) -> tuple[MultiPoly, MultiPoly, MultiPoly] | None:
    """First monomial triple (degree <= max_degree) with alpha({f,g,h}) != {alpha f, alpha g, alpha h}."""
    monos = monomials(max_degree)
    for f, g, h in product(monos, repeat=3):
        if not chain_rule_holds(m, f, g, h):
            return f, g, h
    return None
