"""Re-verification of the classification families and the nonexistence remarks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..constructions import twist
from ..core.builtins import cross4
from ..core.checks import AXIOMS, verify
from ..core.morphisms import check_weak_morphism
from ..core.parametric import ParametricAlgebra
from ..core.report import VerificationReport
from ..core.sampling import DEFAULT_SAMPLES, DEFAULT_SEED, SampledVerification, instantiate_samples, verify_sampled
from ..core.structures import HomNambuPoissonAlgebra
from ..exactmath import format_rational
from .families import EDITORIAL, NO_READING_9, THM51, prop53_parametric, thm51_parametric, untwisted_parametric
from .spaces import associative_search, commutative_slice, leibniz_solution_space


def verify_family(
    algebra: HomNambuPoissonAlgebra | ParametricAlgebra,
    axioms: Iterable[str] | None = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> VerificationReport | SampledVerification:
    """All axioms (or ``axioms``) on a concrete algebra, or per sample on a parametric one."""
    if isinstance(algebra, HomNambuPoissonAlgebra):
        return verify(algebra, axioms)
    return verify_sampled(algebra, axioms, samples, seed)


def _fmt_sample(a: dict) -> dict:
    return {k: format_rational(v) for k, v in sorted(a.items())}


@dataclass
class TwistCheck:
    """Per-sample comparison of a twisted family with twist(untwisted, alpha)."""

    twist_equal: bool = True
    weak_morphism: bool = True
    first_mismatch: dict | None = None
    first_non_morphism: dict | None = None

    def to_dict(self) -> dict:
        out: dict = {"twist_equal": self.twist_equal, "weak_morphism": self.weak_morphism}
        if self.first_mismatch:
            out["first_twist_mismatch"] = self.first_mismatch
        if self.first_non_morphism:
            out["first_weak_morphism_failure"] = self.first_non_morphism
        return out


def twist_check(P: ParametricAlgebra, index: int, samples: int, seed: int, stream: str) -> TwistCheck:
    U = untwisted_parametric(index)
    out = TwistCheck()
    for a, A in instantiate_samples(P, samples, seed, stream):
        base = U.instantiate({k: a[k] for k in U.parameters})
        alpha = A.alpha
        if not twist(base, alpha, check=False).same_structure(A) and out.twist_equal:
            out.twist_equal = False
            out.first_mismatch = _fmt_sample(a)
        rep = check_weak_morphism(alpha, base, base)
        if not rep.passed and out.weak_morphism:
            out.weak_morphism = False
            d = rep.failures()[0].counterexample.to_dict()
            d["sample"] = _fmt_sample(a)
            out.first_non_morphism = d
    return out


@dataclass
class ReadingCheck:
    reading: str
    verification: SampledVerification
    twist: TwistCheck

    @property
    def passed(self) -> bool:
        return self.verification.passed and self.twist.twist_equal and self.twist.weak_morphism

    def axiom_statuses(self) -> dict[str, str]:
        return {ax: self.verification.axiom_status(ax) for ax in AXIOMS}

    def to_dict(self) -> dict:
        out = {"reading": self.reading, "status": "pass" if self.passed else "fail", "axioms": self.axiom_statuses()}
        out.update(self.twist.to_dict())
        first = self.verification.first_failure()
        if first is not None:
            out["first_failure"] = first.to_dict()
        return out


@dataclass
class FamilyCheck:
    index: int
    printed: ReadingCheck
    editorial: ReadingCheck | None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.printed.passed or bool(self.editorial and self.editorial.passed)

    @property
    def flag(self) -> str:
        if self.printed.passed:
            return "printed-form verified"
        if self.editorial is None:
            return "printed-form fails; no editorial reading"
        if self.editorial.passed:
            return "printed-form fails; editorial reading verified"
        return "printed-form fails; editorial reading fails"

    def to_dict(self) -> dict:
        out = {"family": f"prop53:{self.index}", "flag": self.flag, "printed": self.printed.to_dict()}
        if self.editorial is not None:
            out["editorial"] = self.editorial.to_dict()
        if self.note:
            out["note"] = self.note
        return out


def check_reading(index: int, reading: str, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> ReadingCheck:
    P = prop53_parametric(index, reading)
    stream = f"prop53:{index}:{reading}"
    ver = verify_sampled(P, None, samples, seed, stream)
    return ReadingCheck(reading, ver, twist_check(P, index, samples, seed, stream))


def check_prop53(index: int, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> FamilyCheck:
    """Printed family plus its editorial reading (when one exists): axioms, twist equality, weak morphism."""
    printed = check_reading(index, "printed", samples, seed)
    ed = EDITORIAL[index]
    editorial = None
    note = ""
    if ed is not None and not printed.passed:
        editorial = check_reading(index, "editorial", samples, seed)
        note = f"editorial reading: {ed.note}"
    elif index == 9:
        note = NO_READING_9
    return FamilyCheck(index, printed, editorial, note)


@dataclass
class Row:
    id: str
    expected: str  # "pass" rows decide the exit code; "info" rows are reported only
    status: str
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"id": self.id, "expected": self.expected, "status": self.status, "details": self.details}


@dataclass
class ClassificationReport:
    rows: list[Row]
    samples: int
    seed: int

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.rows if r.expected == "pass")

    def to_dict(self) -> dict:
        return {
            "status": "pass" if self.passed else "fail",
            "samples": self.samples,
            "seed": self.seed,
            "rows": [r.to_dict() for r in self.rows],
        }


def classify(samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> ClassificationReport:
    rows: list[Row] = []
    for which in THM51:
        P = thm51_parametric(which)
        ver = verify_sampled(P, None, samples, seed, f"thm51:{which}")
        details = {"axioms": {ax: ver.axiom_status(ax) for ax in AXIOMS}}
        if P.notes:
            details["notes"] = list(P.notes)
        rows.append(Row(f"thm51:{which}", "pass", "pass" if ver.passed else "fail", details))
    P = thm51_parametric("mu1", printed=True)
    ver = verify_sampled(P, None, samples, seed, "thm51:mu1-printed")
    rows.append(Row("thm51:mu1-printed", "info", "pass" if ver.passed else "fail",
                    {"axioms": {ax: ver.axiom_status(ax) for ax in AXIOMS}, "notes": list(P.notes)}))

    for i in range(1, 10):
        fc = check_prop53(i, samples, seed)
        rows.append(Row(f"prop53:{i}", "pass", "pass" if fc.passed else "fail", fc.to_dict()))

    bracket = thm51_parametric("mu1").instantiate({"a": 0, "b": 0}).bracket
    space = leibniz_solution_space(bracket)
    members = {}
    for which in THM51:
        P = thm51_parametric(which)
        members[which] = all(space.satisfies_system(A.mu) and space.contains(A.mu)
                             for _, A in instantiate_samples(P, samples, seed, f"leibniz:{which}"))
    printed_member = all(space.satisfies_system(A.mu) for _, A in
                         instantiate_samples(thm51_parametric("mu1", printed=True), samples, seed, "leibniz:mu1-printed"))
    rows.append(Row("leibniz:thm51", "pass", "pass" if all(members.values()) else "fail",
                    {"dimension": space.dim, "members": members, "mu1-printed member": printed_member}))

    cspace = leibniz_solution_space(cross4().bracket)
    search = associative_search(cspace, seed=seed)
    rows.append(Row("leibniz:cross4", "pass", "fail" if search.found else "pass",
                    {"dimension": cspace.dim, "associative_intersection": search.to_dict()}))

    slice_rep = commutative_slice(space, seed=seed)
    rows.append(Row("commutative-slice:thm51", "pass", "fail" if slice_rep.found else "pass", slice_rep.to_dict()))
    return ClassificationReport(rows, samples, seed)
