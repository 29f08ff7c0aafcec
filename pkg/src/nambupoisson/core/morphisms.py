"""(Weak) morphisms between Hom-Nambu-Poisson algebras and the graph criterion."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..errors import InputError
from ..exactmath import RationalMatrix, in_span
from .report import FAIL, PASS, AxiomResult, Counterexample, VerificationReport
from .structures import HomNambuPoissonAlgebra, basis_vector, sparse_columns, sparse_map, to_dense


def _check_shape(f: RationalMatrix, A: HomNambuPoissonAlgebra, B: HomNambuPoissonAlgebra) -> None:
    if (f.rows, f.cols) != (B.dim, A.dim):
        raise InputError(f"map is {f.rows}x{f.cols}; expected {B.dim}x{A.dim} for dim {A.dim} -> dim {B.dim}")


def weak_morphism_result(f: RationalMatrix, A: HomNambuPoissonAlgebra, B: HomNambuPoissonAlgebra) -> AxiomResult:
    _check_shape(f, A, B)
    fc = sparse_columns(f)
    n = A.dim
    checked = 0
    for i, j, k in product(range(n), repeat=3):
        checked += 1
        lhs = sparse_map(fc, A.bracket.apply(basis_vector(i), basis_vector(j), basis_vector(k)))
        rhs = B.bracket.apply(fc[i], fc[j], fc[k])
        if lhs != rhs:
            cx = Counterexample((i + 1, j + 1, k + 1), "bracket", to_dense(lhs, B.dim), to_dense(rhs, B.dim))
            return AxiomResult("weak-morphism", FAIL, checked, cx)
    for i, j in product(range(n), repeat=2):
        checked += 1
        lhs = sparse_map(fc, A.mu.apply(basis_vector(i), basis_vector(j)))
        rhs = B.mu.apply(fc[i], fc[j])
        if lhs != rhs:
            cx = Counterexample((i + 1, j + 1), "mu", to_dense(lhs, B.dim), to_dense(rhs, B.dim))
            return AxiomResult("weak-morphism", FAIL, checked, cx)
    return AxiomResult("weak-morphism", PASS, checked)


def intertwining_result(f: RationalMatrix, A: HomNambuPoissonAlgebra, B: HomNambuPoissonAlgebra) -> AxiomResult:
    _check_shape(f, A, B)
    checked = 0
    for part in ("beta", "alpha1", "alpha2"):
        lhs_m = f @ getattr(A, part)
        rhs_m = getattr(B, part) @ f
        for i in range(A.dim):
            checked += 1
            lhs, rhs = lhs_m.column(i), rhs_m.column(i)
            if lhs != rhs:
                return AxiomResult("map-intertwining", FAIL, checked, Counterexample((i + 1,), part, lhs, rhs))
    return AxiomResult("map-intertwining", PASS, checked)


def check_weak_morphism(f: RationalMatrix, A: HomNambuPoissonAlgebra, B: HomNambuPoissonAlgebra) -> VerificationReport:
    """f o bracket_A = bracket_B o f^3 and f o mu_A = mu_B o f^2 on basis tuples."""
    return VerificationReport([weak_morphism_result(f, A, B)])


def check_morphism(f: RationalMatrix, A: HomNambuPoissonAlgebra, B: HomNambuPoissonAlgebra) -> VerificationReport:
    """Weak morphism that also intertwines every structure map."""
    return VerificationReport([weak_morphism_result(f, A, B), intertwining_result(f, A, B)])


@dataclass(frozen=True)
class GraphReport:
    closed: bool
    failure: str = ""  # first operation under which the graph is not closed


def graph_subalgebra_check(f: RationalMatrix, A1: HomNambuPoissonAlgebra, A2: HomNambuPoissonAlgebra) -> GraphReport:
    """Whether the graph {(x, f x)} is closed under mu, bracket and every map of A1 (+) A2.

    Membership is decided by a rank test against the spanning set of the graph,
    independently of the morphism equations.
    """
    from ..constructions import direct_sum

    _check_shape(f, A1, A2)
    S = direct_sum(A1, A2)
    n1 = A1.dim
    span = [tuple(1 if k == i else 0 for k in range(n1)) + f.column(i) for i in range(n1)]
    gens = [{k: v for k, v in enumerate(vec) if v} for vec in span]

    def inside(vec) -> bool:
        return in_span(span, to_dense(vec, S.dim))

    for i, j, k in product(range(n1), repeat=3):
        if not inside(S.bracket.apply(gens[i], gens[j], gens[k])):
            return GraphReport(False, f"bracket at generators ({i + 1}, {j + 1}, {k + 1})")
    for i, j in product(range(n1), repeat=2):
        if not inside(S.mu.apply(gens[i], gens[j])):
            return GraphReport(False, f"mu at generators ({i + 1}, {j + 1})")
    for part, cols in (("beta", S.beta_cols), ("alpha1", S.alpha1_cols), ("alpha2", S.alpha2_cols)):
        for i in range(n1):
            if not inside(sparse_map(cols, gens[i])):
                return GraphReport(False, f"{part} at generator {i + 1}")
    return GraphReport(True)
