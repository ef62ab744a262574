"""Finite weak-brace toolkit.

Validation and construction of skew braces and their Clifford-semigroup
generalizations, strong semilattice composition and decomposition,
set-theoretic Yang-Baxter solution tables, ideal lattices, and
nilpotency series.
"""

from .braces import (
    DualWeakBrace,
    SkewBrace,
    relabel,
    trivial_brace,
    validate_dual_weak_brace,
    validate_skew_brace,
)
from .catalog import (
    catalog_braces,
    catalog_get,
    catalog_list,
    catalog_specs,
    catalog_structures,
)
from .compose import (
    IsomorphismWitness,
    StrongSemilatticeSpec,
    are_isomorphic,
    compose,
    decompose,
    enumerate_skew_brace_homs,
    validate_spec,
)
from .errors import (
    InternalInvariantBroken,
    NoPeriod,
    NotAHom,
    NotAnIdeal,
    NotAnnihilatorSeries,
    OrderTooLarge,
    ParseError,
    UnknownName,
    UsageError,
    ValidationError,
    WbkError,
)
from .ideals import (
    IdealDecomposition,
    IdealEnumeration,
    QuotientStructure,
    annihilator,
    commutator_set,
    enumerate_ideals,
    first_isomorphism_check,
    fix,
    generated_full_inverse_subsemigroup,
    ideal_closure,
    ideal_decomposition,
    image,
    is_full_inverse_subsemigroup_add,
    is_ideal,
    is_left_ideal,
    is_strong_left_ideal,
    is_sub_dual_weak_brace,
    kernel,
    left_center,
    product_set,
    quotient,
    socle,
    sub_structure,
    sum_of_ideals,
    verify_hom,
)
from .io import dumps, from_obj, load, to_obj
from .series import (
    Classification,
    SandwichReport,
    SeriesReport,
    annihilator_series,
    classify,
    gamma_series,
    right_series,
    socle_series,
    verify_sandwich,
)
from .solutions import (
    RegularityReport,
    SolutionTable,
    WeakInverseReport,
    check_braid,
    check_regularity,
    check_weak_inverses,
    compose_solutions,
    identity_solution,
    period,
    solution_of,
    solution_table,
    strong_semilattice_of_solutions,
)
from .tables import (
    CliffordTable,
    FiniteGroupTable,
    SemilatticeTable,
    clifford_of_group,
    enumerate_group_homs,
    generating_set,
    validate_clifford,
    validate_group,
    validate_semilattice,
)

__version__ = "0.1.0"

__all__ = [
    "CliffordTable",
    "Classification",
    "DualWeakBrace",
    "FiniteGroupTable",
    "IdealDecomposition",
    "IdealEnumeration",
    "InternalInvariantBroken",
    "IsomorphismWitness",
    "NoPeriod",
    "NotAHom",
    "NotAnIdeal",
    "NotAnnihilatorSeries",
    "OrderTooLarge",
    "ParseError",
    "QuotientStructure",
    "RegularityReport",
    "SandwichReport",
    "SemilatticeTable",
    "SeriesReport",
    "SkewBrace",
    "SolutionTable",
    "StrongSemilatticeSpec",
    "UnknownName",
    "UsageError",
    "ValidationError",
    "WbkError",
    "WeakInverseReport",
    "annihilator",
    "annihilator_series",
    "are_isomorphic",
    "catalog_braces",
    "catalog_get",
    "catalog_list",
    "catalog_specs",
    "catalog_structures",
    "check_braid",
    "check_regularity",
    "check_weak_inverses",
    "classify",
    "clifford_of_group",
    "commutator_set",
    "compose",
    "compose_solutions",
    "decompose",
    "dumps",
    "enumerate_group_homs",
    "enumerate_ideals",
    "enumerate_skew_brace_homs",
    "first_isomorphism_check",
    "fix",
    "from_obj",
    "gamma_series",
    "generated_full_inverse_subsemigroup",
    "generating_set",
    "ideal_closure",
    "ideal_decomposition",
    "identity_solution",
    "image",
    "is_full_inverse_subsemigroup_add",
    "is_ideal",
    "is_left_ideal",
    "is_strong_left_ideal",
    "is_sub_dual_weak_brace",
    "kernel",
    "left_center",
    "load",
    "period",
    "product_set",
    "quotient",
    "relabel",
    "right_series",
    "socle",
    "socle_series",
    "solution_of",
    "solution_table",
    "strong_semilattice_of_solutions",
    "sub_structure",
    "sum_of_ideals",
    "to_obj",
    "trivial_brace",
    "validate_clifford",
    "validate_dual_weak_brace",
    "validate_group",
    "validate_semilattice",
    "validate_spec",
    "verify_hom",
    "verify_sandwich",
]
