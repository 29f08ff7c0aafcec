"""The 3-dimensional families, their twists, and the linear Leibniz system."""

from .families import (
    EDITORIAL,
    THM51,
    UNTWISTED,
    family_names,
    lookup,
    prop53_family,
    prop53_parametric,
    thm51_family,
    thm51_parametric,
    untwisted_parametric,
)
from .run import ClassificationReport, FamilyCheck, check_prop53, classify, twist_check, verify_family
from .spaces import (
    LeibnizSpace,
    SearchReport,
    associative_search,
    commutative_slice,
    commutative_subspace,
    is_associative,
    is_commutative,
    leibniz_solution_space,
    leibniz_system,
    mu_to_vector,
    vector_to_mu,
)

__all__ = [
    "EDITORIAL", "THM51", "UNTWISTED", "ClassificationReport", "FamilyCheck", "LeibnizSpace", "SearchReport",
    "associative_search", "check_prop53", "classify", "commutative_slice", "commutative_subspace",
    "family_names", "is_associative", "is_commutative", "leibniz_solution_space", "leibniz_system", "lookup",
    "mu_to_vector", "prop53_family", "prop53_parametric", "thm51_family", "thm51_parametric", "twist_check",
    "untwisted_parametric", "vector_to_mu", "verify_family",
]
