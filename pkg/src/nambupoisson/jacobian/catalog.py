"""Unimodular polynomial twisting maps of R[x, y, z] in the degree-one and degree-two families.

Each family is transcribed with its printed coefficients.  Where the printed
form cannot be right (a term outside the polynomial ring, or a stray constant
whose grouping into the next coefficient gives det = 1) an editorial reading is
recorded alongside and both are checked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..core.sampling import DEFAULT_SAMPLES, DEFAULT_SEED
from ..errors import InputError
from .condition import FAIL, PASS, ConditionReport, ParametricPolyMorphism, chain_rule_witness, check_morphism_condition, sample_morphisms
from .ops import chain_rule_holds, random_monomial


@dataclass(frozen=True)
class Family:
    id: str
    printed: ParametricPolyMorphism
    editorial: ParametricPolyMorphism | None = None
    note: str = ""

    @property
    def degree(self) -> int:
        return int(self.id[1])


def _fam(fid: str, p1: str, p2: str, p3: str, editorial: tuple[str, str, str] | None = None, note: str = "") -> Family:
    return Family(
        fid,
        ParametricPolyMorphism((p1, p2, p3)),
        ParametricPolyMorphism(editorial) if editorial else None,
        note,
    )


_D2_P3 = "c4*x^2 + c1*x + c2*y + c3*z"

_CATALOG = (
    _fam("d1-01", "x a1 + y a2 + z a3", "b2*y - z/(a1*c2)", "c2*y"),
    _fam("d1-02", "a1*x + a2*y + a3*z", "(1 + a1*b3*c2)/(a1*c3)*y + b3*z", "c2*y + c3*z"),
    _fam("d1-03", "a1*x + a2*y + a3*z", "b1*x + 1/(a2*c1)*z", "c1*x"),
    _fam("d1-04", "a1*x + a2*y + a3*z", "(-1 + a2*b3*c1)/(a2*c3)*x + b3*z", "c1*x + c3*z"),
    _fam(
        "d1-05", "(a2*b1*c3 + b2)/(c3*x) + a2*y + a3*z", "b1*x + b2*y + b3*z", "c3*z",
        ("(a2*b1*c3 + b2)/c3*x + a2*y + a3*z", "b1*x + b2*y + b3*z", "c3*z"),
        "printed x-coefficient divides by x; read as ((a2 b1 c3 + b2)/c3) x",
    ),
    _fam("d1-06", "1/(b2*c3)*x + a2*y + a3*z", "b2*y + b3*z", "c3*z"),
    _fam("d1-07", "a1*x + 1/(b1*c3)*y + a3*z", "b1*x + b3*z", "c3*z"),
    _fam("d1-08", "a1*x + a2*y + 1/(b1*c2)*z", "b1*x", "c1*x + c2*y"),
    _fam("d1-09", "a1*x + -1/(b1*c3 + a3*c2*c3)*y + a3*z", "b1*x", "c1*x + c2*y + c3*z"),
    _fam(
        "d1-10", "a2*b1/b2 + 1/(b2*c3 - b3*c2)*x + a2*y + a3*z", "b1*x + b2*y + b3*z", "b1*c2/b2*x + c2*y + c3*z",
        ("(a2*b1/b2 + 1/(b2*c3 - b3*c2))*x + a2*y + a3*z", "b1*x + b2*y + b3*z", "b1*c2/b2*x + c2*y + c3*z"),
        "stray constant a2 b1/b2 grouped into the x-coefficient",
    ),
    _fam("d1-11", "(-c3 + a2*c1*c2)/(b3*c2^2)*x + a2*y + a3*z", "b3*z", "c1*x + c2*y + c3*z"),
    _fam("d1-12", "a1*x + a2*y + 1/(b1*c2 - b2*c1)*z", "b1*x + b2*y", "c1*x + c2*y"),
    _fam(
        "d1-13", "(1 + a2*b1*c3 - a3*b1*c2 - a2*b3*c1 + a3*b2*c1)/(b2*c3 - b3*c2)*x + a2*y + a3*z",
        "b1*x + b2*y + b3*z", "c1*x + c2*y + c3*z",
    ),
    _fam("d1-14", "a1*x + b2/b3*(a3 - 1/(b1*c2 - b2*c1))*y + a3*z", "b1*x + b2*y + b3*z", "c1*x + c2*y + b3*c2/b2*z"),
    _fam(
        "d2-01", "a2*b1/b2 + 1/(b2*c3 - b3*c2)*x + a2*y + a2*b3/b2*z", "b1*x + b2*y + b3*z", _D2_P3,
        ("(a2*b1/b2 + 1/(b2*c3 - b3*c2))*x + a2*y + a2*b3/b2*z", "b1*x + b2*y + b3*z", _D2_P3),
        "stray constant a2 b1/b2 grouped into the x-coefficient",
    ),
    _fam("d2-02", "a2*x + a3*b2/b3*y + a3*z", "b2*y + b3*z", "c4*x^2 + c1*x + c2*y + (1/a1 + b3*c2)/b2*z"),
    _fam("d2-03", "a2*x + a2*y + a3*z", "b2*y", "c4*x^2 + c1*x + c2*y + 1/(a1*b2)*z"),
    _fam("d2-04", "(a2*b1/b3 - 1/(c2*b3))*x + a3*z", "b1*x + b3*z", _D2_P3),
    _fam("d2-05", "-1/(b3*c2)*x + a3*z", "b3*z", _D2_P3),
    _fam("d2-06", "a1*x - 1/(b1*c3)*y + a3*z", "b1*x", "c4*x^2 + c1*x + c3*z"),
    _fam(
        "d2-07", "a1*x + -1/(b1*c3) + a3*c2/c3*y + a3*z", "b1*x", _D2_P3,
        ("a1*x + (-1/(b1*c3) + a3*c2/c3)*y + a3*z", "b1*x", _D2_P3),
        "stray constant -1/(b1 c3) grouped into the y-coefficient",
    ),
    _fam("d2-08", "a1*x + a2*y + 1/(b1*c2)*z", "b1*x", "c4*x^2 + c1*x + c2*y"),
    _fam("d2-09", "a1*x + a2*y + a3*z", "(1 + a2*b3*c1)/(a2*c3)*x + b3*z", "c1*x + c3*z"),
)


def family_catalog() -> list[Family]:
    """The 23 families d1-01 .. d1-14 and d2-01 .. d2-09 in catalog order."""
    return list(_CATALOG)


def family(fid: str) -> Family:
    for f in _CATALOG:
        if f.id == fid:
            return f
    raise InputError(f"unknown family {fid!r}; expected d1-01 .. d1-14 or d2-01 .. d2-09")


@dataclass
class ReadingResult:
    reading: str  # "printed" or "editorial"
    condition: ConditionReport
    chain_rule: str = "n/a"  # pass / fail / n/a
    witness: tuple[str, str, str] | None = None

    def to_dict(self) -> dict:
        out = {"reading": self.reading, "verdict": self.condition.verdict, "chain_rule": self.chain_rule}
        out.update({k: v for k, v in self.condition.to_dict().items() if k != "verdict"})
        if self.witness:
            out["witness"] = list(self.witness)
        return out


@dataclass
class FamilyRow:
    id: str
    printed: ReadingResult
    editorial: ReadingResult | None = None
    note: str = ""

    @property
    def flag(self) -> str:
        if self.printed.condition.passed:
            return "printed-form verified"
        return "printed-form fails"

    @property
    def any_pass(self) -> bool:
        return self.printed.condition.passed or bool(self.editorial and self.editorial.condition.passed)

    def to_dict(self) -> dict:
        out = {"id": self.id, "flag": self.flag, "printed": self.printed.to_dict()}
        if self.editorial is not None:
            out["editorial"] = self.editorial.to_dict()
            out["note"] = self.note
        return out


def _check_reading(
    name: str, m: ParametricPolyMorphism, stream: str, samples: int, seed: int, chain_trials: int
) -> ReadingResult:
    cond = check_morphism_condition(m, samples, seed, stream)
    res = ReadingResult(name, cond)
    if cond.passed:
        rng = random.Random(f"{seed}:{stream}:chain")
        ok = True
        for _, pm in sample_morphisms(m, samples, seed, stream):
            for _ in range(chain_trials):
                f, g, h = (random_monomial(rng, 2) for _ in range(3))
                if not chain_rule_holds(pm, f, g, h):
                    ok = False
                    res.witness = (str(f), str(g), str(h))
                    break
            if not ok:
                break
        res.chain_rule = "pass" if ok else "fail"
    elif cond.samples or cond.det is not None:
        # the chain rule must break somewhere on a failing map
        pm = sample_morphisms(m, 1, seed, stream)[0][1]
        w = chain_rule_witness(pm)
        if w is not None:
            res.witness = tuple(str(p) for p in w)
            res.chain_rule = "fail"
    return res


def check_family(
    fam: Family, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, chain_trials: int = 20
) -> FamilyRow:
    """Morphism condition for the printed (and editorial) reading.

    Passing readings are also checked against the chain rule on ``chain_trials``
    random monomial triples of degree <= 2 per sample; failing readings get a
    witness triple instead.
    """
    row = FamilyRow(fam.id, _check_reading("printed", fam.printed, fam.id, samples, seed, chain_trials), note=fam.note)
    if fam.editorial is not None:
        row.editorial = _check_reading("editorial", fam.editorial, fam.id, samples, seed, chain_trials)
    return row


def check_families(
    samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, chain_trials: int = 20
) -> list[FamilyRow]:
    return [check_family(f, samples, seed, chain_trials) for f in _CATALOG]


__all__ = [
    "FAIL", "PASS", "Family", "FamilyRow", "ReadingResult", "check_families", "check_family", "family",
    "family_catalog",
]
