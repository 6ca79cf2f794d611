"""Ground truth by brute force: Hall algebras of Kronecker representations over F_2 and F_3."""

from ._kernels import HAVE_NUMBA, backend, set_backend
from .hall import (DEFAULT_BUDGET, BudgetExceeded, FFRep, HallElement, IsoClass, build_indec,
                   canonical_class, class_from_id, enumerate_classes, hall_number, hall_product,
                   hom_dim, letters_product, realize, realize_generator, set_budget)
from .regular import classify_regular, is_regular, regular_blocks, rs_formula, verify_Rs_specialization
from .verify import (OracleReport, run_oracle, verify_associativity, verify_hom_ext, verify_relation,
                     verify_relations, verify_split_independence, verify_words)

__all__ = [
    "HAVE_NUMBA",
    "backend",
    "set_backend",
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "FFRep",
    "HallElement",
    "IsoClass",
    "build_indec",
    "canonical_class",
    "class_from_id",
    "enumerate_classes",
    "hall_number",
    "hall_product",
    "hom_dim",
    "letters_product",
    "realize",
    "realize_generator",
    "set_budget",
    "classify_regular",
    "is_regular",
    "regular_blocks",
    "rs_formula",
    "verify_Rs_specialization",
    "OracleReport",
    "run_oracle",
    "verify_associativity",
    "verify_hom_ext",
    "verify_relation",
    "verify_relations",
    "verify_split_independence",
    "verify_words",
]
