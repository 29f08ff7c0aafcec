"""Random parameter samples for polynomial-identity testing.

Each check draws from its own stream, seeded by ``"<seed>:<stream>"``, so
adding or reordering checks never changes the samples of another one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from ..errors import InadmissibleSample
from .checks import verify
from .parametric import ParametricAlgebra
from .report import VerificationReport
from .structures import HomNambuPoissonAlgebra

DEFAULT_SEED = 1729
DEFAULT_SAMPLES = 5
SAMPLE_LOW, SAMPLE_HIGH = -1000, 1000
MAX_RESAMPLES = 100

Assignment = dict[str, Fraction]


def sample_rng(seed: int, stream: str) -> random.Random:
    return random.Random(f"{seed}:{stream}")


def draw(rng: random.Random, parameters: Sequence[str]) -> Assignment:
    return {p: Fraction(rng.randint(SAMPLE_LOW, SAMPLE_HIGH)) for p in parameters}


def sample_assignments(
    parameters: Sequence[str],
    count: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    stream: str = "",
    admissible: Callable[[Assignment], bool] | None = None,
) -> list[Assignment]:
    """``count`` admissible assignments; at most MAX_RESAMPLES rejections per sample."""
    if not parameters:
        return [{}]
    rng = sample_rng(seed, stream)
    out = []
    for _ in range(count):
        for _attempt in range(MAX_RESAMPLES + 1):
            a = draw(rng, parameters)
            if admissible is None or admissible(a):
                out.append(a)
                break
        else:
            raise InadmissibleSample(f"no admissible sample found for {stream or 'parameters'}")
    return out


def instantiate_samples(
    P: ParametricAlgebra, count: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, stream: str | None = None
) -> list[tuple[Assignment, HomNambuPoissonAlgebra]]:
    """Admissible (assignment, algebra) pairs; a concrete algebra yields exactly one pair."""
    if P.is_concrete:
        return [({}, P.instantiate({}))]
    rng = sample_rng(seed, P.name if stream is None else stream)
    out = []
    for _ in range(count):
        for _attempt in range(MAX_RESAMPLES + 1):
            a = draw(rng, P.parameters)
            try:
                out.append((a, P.instantiate(a)))
                break
            except InadmissibleSample:
                continue
        else:
            raise InadmissibleSample(f"no admissible sample found for {P.name or 'algebra'}")
    return out


@dataclass
class SampledVerification:
    """Per-sample verification reports of a parametric algebra."""

    reports: list[VerificationReport] = field(default_factory=list)
    seed: int = DEFAULT_SEED

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def first_failure(self) -> VerificationReport | None:
        return next((r for r in self.reports if not r.passed), None)

    def axiom_status(self, axiom: str) -> str:
        """``fail`` if any sample fails, ``skipped`` if all skip, else ``pass``."""
        statuses = [r.status(axiom) for r in self.reports]
        if "fail" in statuses:
            return "fail"
        if all(s == "skipped" for s in statuses):
            return "skipped"
        return "pass"

    def to_dict(self) -> dict:
        return {
            "status": "pass" if self.passed else "fail",
            "seed": self.seed,
            "samples": [r.to_dict() for r in self.reports],
        }


def verify_sampled(
    P: ParametricAlgebra | HomNambuPoissonAlgebra,
    axioms: Iterable[str] | None = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    stream: str | None = None,
    fixed: Mapping[str, Fraction] | None = None,
) -> SampledVerification:
    """Verify at ``samples`` admissible points (or once, for a concrete algebra)."""
    if isinstance(P, HomNambuPoissonAlgebra):
        return SampledVerification([verify(P, axioms)], seed)
    if fixed:
        P = P.restrict({k: v for k, v in fixed.items()})
    axioms = None if axioms is None else list(axioms)
    out = SampledVerification(seed=seed)
    for a, A in instantiate_samples(P, samples, seed, stream):
        rep = verify(A, axioms)
        rep.sample = a if a else None
        out.reports.append(rep)
    return out
