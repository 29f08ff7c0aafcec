"""Polynomial Nambu-Poisson algebra R[x, y, z] and its unimodular twists."""

from .catalog import Family, FamilyRow, ReadingResult, check_families, check_family, family, family_catalog
from .condition import FAIL, PASS, ConditionReport, ParametricPolyMorphism, chain_rule_witness, check_morphism_condition
from .ops import (
    VARS,
    IdentityReport,
    PolyMorphism,
    chain_rule_holds,
    jacobian_bracket,
    monomials,
    poly,
    property_test_identities,
    substitute,
    twisted_ops,
)

__all__ = [
    "FAIL", "PASS", "VARS", "ConditionReport", "Family", "FamilyRow", "IdentityReport",
    "ParametricPolyMorphism", "PolyMorphism", "ReadingResult", "chain_rule_holds", "chain_rule_witness",
    "check_families", "check_family", "check_morphism_condition", "family", "family_catalog",
    "jacobian_bracket", "monomials", "poly", "property_test_identities", "substitute", "twisted_ops",
]
