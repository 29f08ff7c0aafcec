"""Direct sums, tensor products with symmetric ternary algebras, and twisting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Iterator

from .core.checks import multiplicative_result, verify
from .core.morphisms import check_weak_morphism
from .core.report import FAIL, PASS, AxiomResult, Counterexample, VerificationReport
from .core.structures import (
    BinaryStructure,
    HomNambuPoissonAlgebra,
    TernaryStructure,
    basis_vector,
    to_dense,
)
from .errors import InputError, PreconditionError
from .exactmath import RationalMatrix

UNVERIFIED = "precondition unverified"


@dataclass(frozen=True, eq=False)
class SymmetricTernaryAlgebra:
    """``(B, tau, (alpha1', alpha2'))`` together with a binary ``(B, mu', beta')`` on the same carrier."""

    tau: TernaryStructure
    mu_prime: BinaryStructure
    beta_prime: RationalMatrix
    alpha1_prime: RationalMatrix
    alpha2_prime: RationalMatrix

    def __post_init__(self) -> None:
        n = self.tau.dim
        if self.mu_prime.dim != n:
            raise InputError("tau and mu' must live on the same carrier")
        for label in ("beta_prime", "alpha1_prime", "alpha2_prime"):
            m = getattr(self, label)
            if (m.rows, m.cols) != (n, n):
                raise InputError(f"{label} must be {n}x{n}")
        if self.tau.skew:
            raise InputError("tau must be stored densely (it is symmetric, not skew)")

    @classmethod
    def build(cls, tau: TernaryStructure, mu_prime: BinaryStructure, alpha: RationalMatrix | None = None,
              *, beta: RationalMatrix | None = None, alpha1: RationalMatrix | None = None,
              alpha2: RationalMatrix | None = None) -> "SymmetricTernaryAlgebra":
        ident = RationalMatrix.identity(tau.dim)
        if alpha is not None:
            beta = alpha1 = alpha2 = alpha
        return cls(tau, mu_prime, beta or ident, alpha1 or ident, alpha2 or ident)

    @classmethod
    def symmetric(cls, dim: int, tau: dict, mu_prime: dict, **maps) -> "SymmetricTernaryAlgebra":
        """Expand ``tau`` given on sorted index triples to all permutations."""
        full = {}
        for key, vec in tau.items():
            if list(key) != sorted(key):
                raise InputError(f"symmetric tau entries need non-decreasing indices, got {key}")
            for perm in set(_perms(tuple(key))):
                full[perm] = vec
        return cls.build(TernaryStructure(dim, full), BinaryStructure(dim, mu_prime), **maps)

    @classmethod
    def unit(cls) -> "SymmetricTernaryAlgebra":
        """The ground field: tau(1,1,1) = 1, mu'(1,1) = 1, identity maps."""
        return cls.build(TernaryStructure(1, {(1, 1, 1): [1]}), BinaryStructure(1, {(1, 1): [1]}))

    @property
    def dim(self) -> int:
        return self.tau.dim

    def validate(self) -> VerificationReport:
        """Symmetry of tau, total Hom-associativity of tau, Hom-associativity of mu'."""
        return VerificationReport([_symmetry(self), _total_assoc(self), _mu_prime_assoc(self)])

    def compat(self) -> VerificationReport:
        return check_tensor_compat(self)


def _perms(t: tuple[int, int, int]) -> Iterator[tuple[int, int, int]]:
    a, b, c = t
    yield from ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a))


def _basis(n: int):
    return [basis_vector(i) for i in range(n)]


def _cx(idx, part, lhs, rhs, n) -> Counterexample:
    return Counterexample(tuple(i + 1 for i in idx), part, to_dense(lhs, n), to_dense(rhs, n))


def _symmetry(B: SymmetricTernaryAlgebra) -> AxiomResult:
    n, t = B.dim, B.tau.apply
    e = _basis(n)
    checked = 0
    for idx in product(range(n), repeat=3):
        base = t(*(e[i] for i in idx))
        for perm in _perms(idx):
            checked += 1
            other = t(*(e[i] for i in perm))
            if other != base:
                return AxiomResult("tau-symmetric", FAIL, checked, _cx(perm, "tau", other, base, n))
    return AxiomResult("tau-symmetric", PASS, checked)


def _total_assoc(B: SymmetricTernaryAlgebra) -> AxiomResult:
    n, t = B.dim, B.tau.apply
    e = _basis(n)
    a1 = [sparse_map_cols(B.alpha1_prime, i) for i in range(n)]
    a2 = [sparse_map_cols(B.alpha2_prime, i) for i in range(n)]
    checked = 0
    for idx in product(range(n), repeat=5):
        x1, x2, x3, x4, x5 = (e[i] for i in idx)
        i1, i2, i3, i4, i5 = idx
        checked += 1
        first = t(a1[i1], a2[i2], t(x3, x4, x5))
        middle = t(a1[i1], t(x2, x3, x4), a2[i5])
        last = t(t(x1, x2, x3), a1[i4], a2[i5])
        if first != middle:
            return AxiomResult("tau-total-hom-associativity", FAIL, checked, _cx(idx, "outer-middle", first, middle, n))
        if middle != last:
            return AxiomResult("tau-total-hom-associativity", FAIL, checked, _cx(idx, "middle-inner", middle, last, n))
    return AxiomResult("tau-total-hom-associativity", PASS, checked)


def _mu_prime_assoc(B: SymmetricTernaryAlgebra) -> AxiomResult:
    n, m = B.dim, B.mu_prime.apply
    e = _basis(n)
    b = [sparse_map_cols(B.beta_prime, i) for i in range(n)]
    checked = 0
    for i, j, k in product(range(n), repeat=3):
        checked += 1
        lhs = m(b[i], m(e[j], e[k]))
        rhs = m(m(e[i], e[j]), b[k])
        if lhs != rhs:
            return AxiomResult("mu-prime-hom-associativity", FAIL, checked, _cx((i, j, k), "mu'", lhs, rhs, n))
    return AxiomResult("mu-prime-hom-associativity", PASS, checked)


def sparse_map_cols(m: RationalMatrix, j: int) -> dict[int, Fraction]:
    return {i: v for i, v in enumerate(m.column(j)) if v}


def check_tensor_compat(B: SymmetricTernaryAlgebra) -> VerificationReport:
    """tau(mu'(b1,b2),b3,b4) = mu'(b1,tau(b2,b3,b4)) = mu'(tau(b1,b3,b4),b2) on all basis quadruples."""
    n, t, m = B.dim, B.tau.apply, B.mu_prime.apply
    e = _basis(n)
    checked = 0
    for idx in product(range(n), repeat=4):
        b1, b2, b3, b4 = (e[i] for i in idx)
        checked += 1
        first = t(m(b1, b2), b3, b4)
        second = m(b1, t(b2, b3, b4))
        third = m(t(b1, b3, b4), b2)
        if first != second:
            return VerificationReport([AxiomResult("tensor-compat", FAIL, checked, _cx(idx, "first-second", first, second, n))])
        if second != third:
            return VerificationReport([AxiomResult("tensor-compat", FAIL, checked, _cx(idx, "second-third", second, third, n))])
    return VerificationReport([AxiomResult("tensor-compat", PASS, checked)])


def direct_sum(A1: HomNambuPoissonAlgebra, A2: HomNambuPoissonAlgebra) -> HomNambuPoissonAlgebra:
    """Componentwise structure on A1 (+) A2; basis is A1's followed by A2's."""
    n1, n2 = A1.dim, A2.dim
    n = n1 + n2

    def left(v):
        return tuple(v) + (0,) * n2

    def right(v):
        return (0,) * n1 + tuple(v)

    mu = {k: left(v) for k, v in A1.mu.entries.items()}
    mu.update({(i + n1, j + n1): right(v) for (i, j), v in A2.mu.entries.items()})
    skew = A1.bracket.skew and A2.bracket.skew
    br1 = A1.bracket.entries if skew else A1.bracket.dense_entries()
    br2 = A2.bracket.entries if skew else A2.bracket.dense_entries()
    br = {k: left(v) for k, v in br1.items()}
    br.update({(i + n1, j + n1, k + n1): right(v) for (i, j, k), v in br2.items()})
    labels = A1.labels + A2.labels
    if len(set(labels)) != n:
        labels = ()
    return HomNambuPoissonAlgebra(
        BinaryStructure(n, mu),
        TernaryStructure(n, br, skew),
        A1.beta.block_diag(A2.beta),
        A1.alpha1.block_diag(A2.alpha1),
        A1.alpha2.block_diag(A2.alpha2),
        labels,
        f"{A1.name or 'A1'} + {A2.name or 'A2'}",
        A1.notes + A2.notes,
    )


def _tensor_raw(A: HomNambuPoissonAlgebra, B: SymmetricTernaryAlgebra) -> HomNambuPoissonAlgebra:
    nA, nB = A.dim, B.dim
    n = nA * nB

    def kron(u, v):
        return [a * b for a in u for b in v]

    mu = {}
    for (i, j), va in A.mu.entries.items():
        for (p, q), vb in B.mu_prime.entries.items():
            mu[((i - 1) * nB + p, (j - 1) * nB + q)] = kron(va, vb)
    br = {}
    for (i, j, k), va in A.bracket.dense_entries().items():
        for (p, q, r), vb in B.tau.entries.items():
            br[((i - 1) * nB + p, (j - 1) * nB + q, (k - 1) * nB + r)] = kron(va, vb)
    labels = tuple(f"{a}*f{p + 1}" for a in A.labels for p in range(nB))
    return HomNambuPoissonAlgebra(
        BinaryStructure(n, mu),
        TernaryStructure(n, br, skew=False),
        A.beta.kron(B.beta_prime),
        A.alpha1.kron(B.alpha1_prime),
        A.alpha2.kron(B.alpha2_prime),
        labels,
        f"{A.name or 'A'} (x) B",
        A.notes,
    )


def tensor_product(A: HomNambuPoissonAlgebra, B: SymmetricTernaryAlgebra, *, check: bool = True) -> HomNambuPoissonAlgebra:
    """A (x) B with basis e_i (x) f_p at index i * dim(B) + p (0-based).

    The bracket is emitted densely, so skew-symmetry of the result is checked
    rather than assumed.  With ``check`` the invariants of B and the
    compatibility condition are verified first.
    """
    if check:
        rep = B.validate().merge(check_tensor_compat(B))
        if not rep.passed:
            bad = rep.failures()[0]
            raise PreconditionError(f"tensor factor rejected: {bad.axiom} fails, {bad.counterexample.describe()}", rep)
        return _tensor_raw(A, B)
    return _tensor_raw(A, B).with_notes(UNVERIFIED)


def _twist_raw(A: HomNambuPoissonAlgebra, b: RationalMatrix, notes: tuple[str, ...]) -> HomNambuPoissonAlgebra:
    return HomNambuPoissonAlgebra(
        A.mu.post_compose(b),
        A.bracket.post_compose(b),
        b @ A.beta,
        b @ A.alpha1,
        b @ A.alpha2,
        A.labels,
        A.name,
        A.notes + notes,
    )


def twist(A: HomNambuPoissonAlgebra, b: RationalMatrix, *, check: bool = True) -> HomNambuPoissonAlgebra:
    """A_b = (A, b o mu, b o bracket, b beta, (b alpha1, b alpha2)).

    ``b`` must be a weak morphism of A; with ``check=False`` the hypothesis is
    skipped and the result carries the note "precondition unverified".
    """
    if (b.rows, b.cols) != (A.dim, A.dim):
        raise InputError(f"twisting map must be {A.dim}x{A.dim}")
    if not check:
        return _twist_raw(A, b, (UNVERIFIED,))
    rep = check_weak_morphism(b, A, A)
    if not rep.passed:
        cx = rep.failures()[0].counterexample
        raise PreconditionError(f"twisting map is not a weak morphism: {cx.describe(A.labels)}", rep)
    return _twist_raw(A, b, ())


def iterate_twist(A: HomNambuPoissonAlgebra, n: int) -> HomNambuPoissonAlgebra:
    """A^n = (A, alpha^n o mu, alpha^n o bracket, alpha^(n+1)) for a multiplicative single-map A."""
    if not isinstance(n, int) or n < 0:
        raise InputError(f"iteration count must be a non-negative integer, got {n!r}")
    res = multiplicative_result(A)
    if res.status != PASS:
        why = res.note if res.counterexample is None else res.counterexample.describe(A.labels)
        raise PreconditionError(f"iterated twist needs a multiplicative algebra: {why}", VerificationReport([res]))
    if n == 0:
        return A
    return _twist_raw(A, A.alpha.power(n), ())


# search for a factor B violating the compatibility condition whose tensor product breaks an axiom

def _small_structures(dim: int, coeffs: tuple[int, ...]):
    sym_keys = list(combinations_with_replacement(range(1, dim + 1), 3))
    mu_keys = list(product(range(1, dim + 1), repeat=2))
    vecs = list(product(coeffs, repeat=dim))
    for mu_choice in product(vecs, repeat=len(mu_keys)):
        mu = {k: v for k, v in zip(mu_keys, mu_choice) if any(v)}
        for tau_choice in product(vecs, repeat=len(sym_keys)):
            tau = {k: v for k, v in zip(sym_keys, tau_choice) if any(v)}
            yield tau, mu


@dataclass(frozen=True)
class CompatWitness:
    factor: SymmetricTernaryAlgebra
    compat: VerificationReport
    product_report: VerificationReport


def compat_witness_search(
    A: HomNambuPoissonAlgebra, max_dim: int = 2, coeffs: tuple[int, ...] = (0, 1)
) -> CompatWitness | None:
    """First small B (identity maps) that is a valid factor, fails compatibility, and makes A (x) B fail an axiom.

    Factors are enumerated by dimension, then by mu', then by tau, so the result
    is deterministic.  ``None`` means no witness at this scale.
    """
    for dim in range(1, max_dim + 1):
        for tau, mu in _small_structures(dim, coeffs):
            B = SymmetricTernaryAlgebra.symmetric(dim, tau, mu)
            if not B.validate().passed:
                continue
            compat = check_tensor_compat(B)
            if compat.passed:
                continue
            rep = verify(_tensor_raw(A, B), ["hom-associativity", "hom-leibniz", "hom-nambu"])
            if not rep.passed:
                return CompatWitness(B, compat, rep)
    return None
