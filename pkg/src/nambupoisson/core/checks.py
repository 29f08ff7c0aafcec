"""Exhaustive axiom checkers on basis tuples.

Every identity here is multilinear, so checking it on all basis tuples decides
it for arbitrary vectors.  Tuples are visited in lexicographic order and the
first violation is returned, so reports are deterministic.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterable, Sequence

from ..errors import InputError
from .report import FAIL, PASS, SKIPPED, AxiomResult, Counterexample, VerificationReport
from .structures import (
    HomNambuPoissonAlgebra,
    Sparse,
    basis_vector,
    sparse_add,
    sparse_map,
    sparse_scale,
    to_dense,
    to_sparse,
)

AXIOMS = ("skew", "hom-associativity", "hom-nambu", "hom-leibniz", "multiplicative")

Sides = Callable[[HomNambuPoissonAlgebra, Sequence[Sparse]], tuple[Sparse, Sparse]]

_MINUS = -1


def _skew(perm: tuple[int, int, int]) -> Sides:
    def sides(A, v):
        br = A.bracket.apply
        permuted = [v[p] for p in perm]
        return br(*permuted), sparse_scale(_MINUS, br(*v))

    return sides


def _hom_assoc(A, v):
    x, y, z = v
    mu = A.mu.apply
    b = A.beta_cols
    return mu(sparse_map(b, x), mu(y, z)), mu(mu(x, y), sparse_map(b, z))


def _hom_nambu(A, v):
    x1, x2, x3, x4, x5 = v
    br = A.bracket.apply
    a1, a2 = A.alpha1_cols, A.alpha2_cols
    lhs = br(sparse_map(a1, x1), sparse_map(a2, x2), br(x3, x4, x5))
    rhs = sparse_add(
        br(br(x1, x2, x3), sparse_map(a1, x4), sparse_map(a2, x5)),
        br(sparse_map(a1, x3), br(x1, x2, x4), sparse_map(a2, x5)),
        br(sparse_map(a1, x3), sparse_map(a2, x4), br(x1, x2, x5)),
    )
    return lhs, rhs


def _hom_leibniz(A, v):
    x1, x2, x3, x4 = v
    br = A.bracket.apply
    mu = A.mu.apply
    b = A.beta_cols
    lhs = br(mu(x1, x2), sparse_map(A.alpha1_cols, x3), sparse_map(A.alpha2_cols, x4))
    rhs = sparse_add(mu(sparse_map(b, x1), br(x2, x3, x4)), mu(br(x1, x3, x4), sparse_map(b, x2)))
    return lhs, rhs


def _mult_mu(A, v):
    x, y = v
    a = A.beta_cols
    return sparse_map(a, A.mu.apply(x, y)), A.mu.apply(sparse_map(a, x), sparse_map(a, y))


def _mult_bracket(A, v):
    x, y, z = v
    a = A.beta_cols
    return (
        sparse_map(a, A.bracket.apply(x, y, z)),
        A.bracket.apply(sparse_map(a, x), sparse_map(a, y), sparse_map(a, z)),
    )


# axiom -> ordered (part, arity, sides); parts sharing an arity are checked tuple-major
IDENTITIES: dict[str, list[tuple[str, int, Sides]]] = {
    "skew": [
        ("swap12", 3, _skew((1, 0, 2))),
        ("swap13", 3, _skew((2, 1, 0))),
        ("swap23", 3, _skew((0, 2, 1))),
    ],
    "hom-associativity": [("mu", 3, _hom_assoc)],
    "hom-nambu": [("bracket", 5, _hom_nambu)],
    "hom-leibniz": [("leibniz", 4, _hom_leibniz)],
    "multiplicative": [("mu", 2, _mult_mu), ("bracket", 3, _mult_bracket)],
}


def _groups(parts):
    groups: list[tuple[int, list]] = []
    for part in parts:
        if groups and groups[-1][0] == part[1]:
            groups[-1][1].append(part)
        else:
            groups.append((part[1], [part]))
    return groups


def run_identity(A: HomNambuPoissonAlgebra, axiom: str) -> AxiomResult:
    """Check one identity on every basis tuple; first failure in lexicographic order."""
    if axiom not in IDENTITIES:
        raise InputError(f"unknown axiom {axiom!r}; expected one of {AXIOMS}")
    n = A.dim
    basis = [basis_vector(i) for i in range(n)]
    checked = 0
    for arity, parts in _groups(IDENTITIES[axiom]):
        for idx in product(range(n), repeat=arity):
            args = [basis[i] for i in idx]
            for part, _, sides in parts:
                checked += 1
                lhs, rhs = sides(A, args)
                if lhs != rhs:
                    cx = Counterexample(tuple(i + 1 for i in idx), part, to_dense(lhs, n), to_dense(rhs, n))
                    return AxiomResult(axiom, FAIL, checked, cx)
    return AxiomResult(axiom, PASS, checked)


def replay(A: HomNambuPoissonAlgebra, axiom: str, cx: Counterexample) -> tuple[tuple, tuple]:
    """Recompute both sides for a stored counterexample."""
    for part, arity, sides in IDENTITIES[axiom]:
        if part == cx.part and arity == len(cx.indices):
            lhs, rhs = sides(A, [basis_vector(i - 1) for i in cx.indices])
            return to_dense(lhs, A.dim), to_dense(rhs, A.dim)
    raise InputError(f"no part {cx.part!r} of arity {len(cx.indices)} in {axiom!r}")


def identity_holds_on(A: HomNambuPoissonAlgebra, axiom: str, vectors: Sequence[Sequence]) -> bool:
    """Evaluate every part of ``axiom`` on explicit coordinate vectors (not only basis vectors)."""
    sp = [to_sparse(v) for v in vectors]
    for _, arity, sides in IDENTITIES[axiom]:
        lhs, rhs = sides(A, sp[:arity])
        if lhs != rhs:
            return False
    return True


def check_skew(A: HomNambuPoissonAlgebra) -> VerificationReport:
    return VerificationReport([run_identity(A, "skew")])


def check_hom_associativity(A: HomNambuPoissonAlgebra) -> VerificationReport:
    return VerificationReport([run_identity(A, "hom-associativity")])


def check_hom_nambu(A: HomNambuPoissonAlgebra) -> VerificationReport:
    return VerificationReport([run_identity(A, "hom-nambu")])


def check_hom_leibniz(A: HomNambuPoissonAlgebra) -> VerificationReport:
    return VerificationReport([run_identity(A, "hom-leibniz")])


def multiplicative_result(A: HomNambuPoissonAlgebra) -> AxiomResult:
    if not A.is_single_map:
        return AxiomResult("multiplicative", SKIPPED, note="structure maps differ; multiplicativity needs a single map")
    res = run_identity(A, "multiplicative")
    regular = A.alpha.is_invertible()
    return AxiomResult(res.axiom, res.status, res.checked, res.counterexample, f"regular={str(regular).lower()}")


def check_multiplicative(A: HomNambuPoissonAlgebra) -> VerificationReport:
    return VerificationReport([multiplicative_result(A)])


def is_regular(A: HomNambuPoissonAlgebra) -> bool:
    """Multiplicative with an invertible structure map."""
    r = multiplicative_result(A)
    return r.status == PASS and A.alpha.is_invertible()


def verify(A: HomNambuPoissonAlgebra, axioms: Iterable[str] | None = None) -> VerificationReport:
    """Run the requested axioms (all by default) in canonical order.

    Skew-symmetry is always included when the bracket is stored densely, since
    the Nambu checks only make sense for a skew bracket.
    """
    wanted = list(AXIOMS) if axioms is None else list(axioms)
    for ax in wanted:
        if ax not in AXIOMS:
            raise InputError(f"unknown axiom {ax!r}; expected one of {AXIOMS}")
    if not A.bracket.skew and "skew" not in wanted:
        wanted.append("skew")
    results = []
    for ax in AXIOMS:
        if ax not in wanted:
            continue
        results.append(multiplicative_result(A) if ax == "multiplicative" else run_identity(A, ax))
    report = VerificationReport(results)
    report.notes.extend(A.notes)
    return report
