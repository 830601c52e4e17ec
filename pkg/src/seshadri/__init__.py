"""Certified lower bounds for multi-point Seshadri constants of the plane.

Exact-arithmetic computation of f(n) in the bound
eps(n) >= (1/sqrt(n)) * sqrt(1 - 1/f(n)) for n >= 10 general points,
by enumerating prospective abnormal classes, excluding them through a
specialization/unloading criterion and a provenance-tagged database of
imported non-effectivity facts, and cross-checking every closed-form bound.
"""
from .bounds import (
    BestKnown,
    BoundReport,
    Coverage,
    FormulaBound,
    all_formula_bounds,
    best_known,
    bounds_for_ns,
    compute_bound,
    formula_correm_and_circ,
    formula_theoremone,
    lemcc_hypothesis,
    mu_n,
    theoremunif_hypothesis,
)
from .candidates import (
    CandidateTriple,
    EValue,
    almunif_filter,
    e_value,
    enumerate_szcor,
    passes_testlem,
)
from .effectivity import (
    SpecializationConfig,
    UnloadingTrace,
    alpha_lb_closed,
    alpha_lower_bound,
    criterion_holds,
    d_sequence,
    semiuniformize,
    unload,
)
from .exclusions import ExclusionDb, ExclusionResult, default_db, is_excluded
from .lattice import (
    DimensionMismatch,
    DivisorClass,
    DomainError,
    InvalidInput,
    QuadraticExpr,
    compare_rational_sqrt,
    intersect,
    sign_of,
)

__version__ = "0.1.0"

__all__ = [
    "BestKnown",
    "BoundReport",
    "CandidateTriple",
    "Coverage",
    "DimensionMismatch",
    "DivisorClass",
    "DomainError",
    "EValue",
    "ExclusionDb",
    "ExclusionResult",
    "FormulaBound",
    "InvalidInput",
    "QuadraticExpr",
    "SpecializationConfig",
    "UnloadingTrace",
    "all_formula_bounds",
    "almunif_filter",
    "alpha_lb_closed",
    "alpha_lower_bound",
    "best_known",
    "bounds_for_ns",
    "compare_rational_sqrt",
    "compute_bound",
    "criterion_holds",
    "d_sequence",
    "default_db",
    "e_value",
    "enumerate_szcor",
    "formula_correm_and_circ",
    "formula_theoremone",
    "intersect",
    "is_excluded",
    "lemcc_hypothesis",
    "mu_n",
    "passes_testlem",
    "semiuniformize",
    "sign_of",
    "theoremunif_hypothesis",
    "unload",
]
