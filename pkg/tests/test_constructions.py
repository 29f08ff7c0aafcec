from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, product

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from nambupoisson.classification import prop53_family, prop53_parametric
from nambupoisson.constructions import (
    UNVERIFIED,
    SymmetricTernaryAlgebra,
    check_tensor_compat,
    compat_witness_search,
    direct_sum,
    iterate_twist,
    tensor_product,
    twist,
)
from nambupoisson.core import builtin, check_morphism, check_weak_morphism, cross4, verify
from nambupoisson.errors import InputError, PreconditionError
from nambupoisson.exactmath import RationalMatrix

ALGEBRA_AXIOMS = ["skew", "hom-associativity", "hom-nambu", "hom-leibniz"]


def unit(n: int, i: int) -> tuple:
    return tuple(int(k == i) for k in range(n))


def mu3(a=2):
    return builtin("thm51-mu3", {"a": a})


# direct sums

def test_direct_sum_of_thm51_algebras_is_valid():
    S = direct_sum(builtin("thm51-mu1", {"a": 2, "b": -3}), builtin("thm51-mu2", {"a": 5, "b": 7}))
    assert S.dim == 6
    rep = verify(S)
    assert rep.passed
    assert rep.result("hom-nambu").checked == 6 ** 5


def test_direct_sum_inclusions_are_morphisms():
    A1, A2 = builtin("thm51-mu3", {"a": 4}), cross4()
    S = direct_sum(A1, A2)
    inc1 = RationalMatrix.from_columns([unit(7, i) for i in range(3)])
    inc2 = RationalMatrix.from_columns([unit(7, 3 + i) for i in range(4)])
    assert check_morphism(inc1, A1, S).passed
    assert check_morphism(inc2, A2, S).passed


def test_direct_sum_blocks_do_not_interact():
    S = direct_sum(mu3(), mu3())
    for i, j in product(range(3), range(3, 6)):
        assert not any(S.mu(unit(6, i), unit(6, j)))
        assert not any(S.mu(unit(6, j), unit(6, i)))


def test_direct_sum_of_twisted_families_keeps_maps():
    A = prop53_family(8, {"a": 2, "c": 3, "d": 1, "g": -1, "h": 5})
    S = direct_sum(A, A)
    assert S.alpha == A.alpha.block_diag(A.alpha)
    assert verify(S).passed


# tensor products

def test_tensor_with_unit_reproduces_structure_constants():
    for A in (builtin("thm51-mu1", {"a": 3, "b": -1}), cross4(),
              prop53_family(8, {"a": 2, "c": 3, "d": 1, "g": -1, "h": 5})):
        T = tensor_product(A, SymmetricTernaryAlgebra.unit())
        assert T.mu == A.mu
        assert T.bracket.same_tensor(A.bracket)
        assert (T.beta, T.alpha1, T.alpha2) == (A.beta, A.alpha1, A.alpha2)


def symmetric_factors():
    def build(dim):
        keys = list(combinations_with_replacement(range(1, dim + 1), 3))
        vec = st.lists(st.sampled_from([0, 0, 0, 1, -1]), min_size=dim, max_size=dim)
        tau = st.fixed_dictionaries({k: vec for k in keys})
        mu = st.fixed_dictionaries({k: vec for k in product(range(1, dim + 1), repeat=2)})
        return st.tuples(st.just(dim), tau, mu)

    return st.one_of(build(1), build(2))


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(symmetric_factors())
def test_compatible_factor_gives_valid_product(data):
    dim, tau, mu = data
    B = SymmetricTernaryAlgebra.symmetric(dim, tau, mu)
    assume(B.validate().passed and check_tensor_compat(B).passed)
    T = tensor_product(builtin("thm51-mu3", {"a": 3}), B)
    assert verify(T, ALGEBRA_AXIOMS).passed


@settings(max_examples=25, deadline=None)
@given(symmetric_factors())
def test_tensor_structure_constants_are_kronecker_products(data):
    dim, tau, mu = data
    B = SymmetricTernaryAlgebra.symmetric(dim, tau, mu)
    A = builtin("thm51-mu1", {"a": 2, "b": 3})
    T = tensor_product(A, B, check=False)
    nA = A.dim
    for i, j, p, q in product(range(nA), range(nA), range(dim), range(dim)):
        expected = [x * y for x in A.mu(unit(nA, i), unit(nA, j)) for y in B.mu_prime(unit(dim, p), unit(dim, q))]
        assert list(T.mu(unit(nA * dim, i * dim + p), unit(nA * dim, j * dim + q))) == expected


def test_tensor_unchecked_notes_precondition():
    B = SymmetricTernaryAlgebra.symmetric(2, {(1, 1, 1): [1, 0]}, {(1, 1): [0, 1]})
    T = tensor_product(cross4(), B, check=False)
    assert UNVERIFIED in T.notes


def test_incompatible_factor_is_refused_with_quadruple():
    B = SymmetricTernaryAlgebra.symmetric(2, {(1, 1, 1): [1, 0]}, {(1, 1): [0, 1]})
    with pytest.raises(PreconditionError) as err:
        tensor_product(cross4(), B)
    assert "tensor-compat" in str(err.value)
    assert "(e1, e1, e1, e1)" in str(err.value)


def test_compat_witness_breaks_an_axiom():
    A = builtin("thm51-mu1", {"a": 2, "b": 3})
    w = compat_witness_search(A)
    assert w is not None
    assert not w.compat.passed
    assert not w.product_report.passed
    assert w.factor.validate().passed


# twisting

def test_twist_by_identity_is_bit_exact():
    for A in (cross4(), builtin("thm51-mu2", {"a": 3, "b": 4})):
        T = twist(A, RationalMatrix.identity(A.dim))
        assert T.same_structure(A)
        assert T.notes == A.notes


def test_twist_rejects_non_weak_morphism():
    with pytest.raises(PreconditionError) as err:
        twist(cross4(), RationalMatrix.identity(4).scale(2))
    assert "not a weak morphism" in str(err.value)


def test_twist_unchecked_carries_note():
    T = twist(cross4(), RationalMatrix.identity(4).scale(2), check=False)
    assert UNVERIFIED in T.notes


def test_twist_shape_mismatch():
    with pytest.raises(InputError):
        twist(cross4(), RationalMatrix.identity(3))


params8 = st.fixed_dictionaries({k: st.integers(-9, 9) for k in ("c", "d", "g", "h")})


@settings(max_examples=20, deadline=None)
@given(st.integers(-9, 9).filter(bool), params8)
def test_twisting_principle_on_family_eight(a, p):
    # the printed structure map of family 8 is a weak morphism of mu3
    A = mu3(a)
    alpha = prop53_family(8, {"a": a, **p}).alpha
    assert check_weak_morphism(alpha, A, A).passed
    T = twist(A, alpha)
    assert verify(T, ALGEBRA_AXIOMS).passed
    assert T.same_structure(prop53_family(8, {"a": a, **p}))


@settings(max_examples=15, deadline=None)
@given(st.integers(-9, 9).filter(bool), params8)
def test_iterated_twists(a, p):
    A = prop53_family(8, {"a": a, **p})
    assert verify(A, ["multiplicative"]).passed
    assert iterate_twist(A, 0).same_structure(A)
    assert iterate_twist(A, 1).same_structure(twist(A, A.alpha, check=False).with_notes())
    A2 = iterate_twist(A, 2)
    assert verify(A2, ["multiplicative"]).passed
    assert A2.alpha == A.alpha.power(3)


def test_iterate_twist_needs_multiplicative_input():
    P = prop53_parametric(1)
    A = P.instantiate({"a": 2, "b": 3, "c": 5, "d": 1, "g": 1, "h": 1})
    with pytest.raises(PreconditionError):
        iterate_twist(A, 1)


def test_iterate_twist_rejects_negative_count():
    with pytest.raises(InputError):
        iterate_twist(mu3(), -1)


def test_twist_composes_maps_in_order():
    A = prop53_family(8, {"a": 2, "c": 3, "d": 1, "g": -1, "h": 5})
    b = A.alpha
    T = twist(A, b, check=False)
    assert T.beta == b @ A.beta
    x, y = unit(3, 2), unit(3, 1)
    assert T.mu(x, y) == b.apply(A.mu(x, y))


@pytest.mark.parametrize("lam,kap", [(lam, kap) for lam in range(-2, 3) for kap in range(-2, 3)])
def test_one_dimensional_factors(lam, kap):
    # tau = lam, mu' = kap: compatible always; the product rescales mu by kap and the bracket by lam
    B = SymmetricTernaryAlgebra.symmetric(1, {(1, 1, 1): [lam]}, {(1, 1): [kap]})
    assert B.validate().passed and check_tensor_compat(B).passed
    A = builtin("thm51-mu1", {"a": 2, "b": 3})
    T = tensor_product(A, B)
    e = [unit(3, i) for i in range(3)]
    assert T.mu(e[1], e[0]) == tuple(Fraction(kap) * v for v in A.mu(e[1], e[0]))
    assert T.bracket(*e) == tuple(Fraction(lam) * v for v in A.bracket(*e))
    assert verify(T, ALGEBRA_AXIOMS).passed
