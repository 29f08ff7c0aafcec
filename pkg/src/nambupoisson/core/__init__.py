"""Structure-constant algebras, axiom checkers, morphisms and built-ins."""

from .builtins import BUILTINS, builtin, builtin_names, builtin_parametric, cross4
from .checks import (
    AXIOMS,
    check_hom_associativity,
    check_hom_leibniz,
    check_hom_nambu,
    check_multiplicative,
    check_skew,
    identity_holds_on,
    is_regular,
    replay,
    run_identity,
    verify,
)
from .morphisms import GraphReport, check_morphism, check_weak_morphism, graph_subalgebra_check
from .parametric import ParametricAlgebra, as_expr
from .report import FAIL, PASS, SKIPPED, AxiomResult, Counterexample, VerificationReport
from .sampling import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    SampledVerification,
    instantiate_samples,
    sample_assignments,
    sample_rng,
    verify_sampled,
)
from .structures import BinaryStructure, HomNambuPoissonAlgebra, TernaryStructure, eval_bracket, eval_mu

__all__ = [
    "AXIOMS", "AxiomResult", "BUILTINS", "BinaryStructure", "Counterexample", "DEFAULT_SAMPLES",
    "DEFAULT_SEED", "FAIL", "GraphReport", "HomNambuPoissonAlgebra", "PASS", "ParametricAlgebra",
    "SKIPPED", "SampledVerification", "TernaryStructure", "VerificationReport", "as_expr", "builtin",
    "builtin_names", "builtin_parametric", "check_hom_associativity", "check_hom_leibniz",
    "check_hom_nambu", "check_morphism", "check_multiplicative", "check_skew", "check_weak_morphism",
    "cross4", "eval_bracket", "eval_mu", "graph_subalgebra_check", "identity_holds_on",
    "instantiate_samples", "is_regular", "replay", "run_identity", "sample_assignments", "sample_rng",
    "verify", "verify_sampled",
]
