"""Verification verdicts with replayable counterexamples."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from ..exactmath import format_rational

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class Counterexample:
    indices: tuple[int, ...]  # 1-based basis tuple
    part: str
    lhs: tuple[Fraction, ...]
    rhs: tuple[Fraction, ...]

    def to_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "part": self.part,
            "lhs": [format_rational(v) for v in self.lhs],
            "rhs": [format_rational(v) for v in self.rhs],
        }

    def describe(self, labels: tuple[str, ...] | None = None) -> str:
        def name(i: int) -> str:
            return labels[i - 1] if labels else f"e{i}"

        args = ", ".join(name(i) for i in self.indices)
        lhs = ", ".join(format_rational(v) for v in self.lhs)
        rhs = ", ".join(format_rational(v) for v in self.rhs)
        return f"{self.part} at ({args}): lhs=({lhs}) rhs=({rhs})"


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    status: str
    checked: int = 0
    counterexample: Counterexample | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        out: dict = {"axiom": self.axiom, "status": self.status, "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_dict()
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    results: list[AxiomResult] = field(default_factory=list)
    sample: Mapping[str, Fraction] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    def result(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    def status(self, axiom: str) -> str:
        return self.result(axiom).status

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if r.status == FAIL]

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.results + other.results, self.sample or other.sample, self.notes + other.notes)

    def to_dict(self) -> dict:
        out: dict = {
            "status": PASS if self.passed else FAIL,
            "axioms": [r.to_dict() for r in self.results],
        }
        if self.sample is not None:
            out["sample"] = {k: format_rational(v) for k, v in sorted(self.sample.items())}
        if self.notes:
            out["notes"] = list(self.notes)
        return out
