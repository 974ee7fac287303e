"""Exact cyclotomic periods of 2-power order over F_{p^s}.

Thin wrapper over the C++ core: explicit finite fields, the brute-force
period oracle, quadratic partitions, closed-form spectra/factorizations,
diagonal-equation counts, and irreducible cyclic code weight enumerators.
"""

from ._core import (
    BudgetError,
    CodeSpec,
    Field,
    FieldElem,
    InconsistencyError,
    InvalidInputError,
    build_code,
    char2_poly,
    classify,
    count_diagonal,
    counts_formula,
    enumerator_closed_form,
    factorization,
    factorization_display,
    oracle_period_poly,
    period_counts,
    reduced_periods,
    semiprimitive_poly,
    solve_2b2,
    solve_sum_of_squares,
    spectrum,
    subfield_poly,
    verify_instance,
    weight_distribution_bruteforce,
)

__all__ = [
    "BudgetError",
    "CodeSpec",
    "Field",
    "FieldElem",
    "InconsistencyError",
    "InvalidInputError",
    "build_code",
    "char2_poly",
    "classify",
    "count_diagonal",
    "counts_formula",
    "enumerator_closed_form",
    "factorization",
    "factorization_display",
    "oracle_period_poly",
    "period_counts",
    "reduced_periods",
    "semiprimitive_poly",
    "solve_2b2",
    "solve_sum_of_squares",
    "spectrum",
    "subfield_poly",
    "verify_instance",
    "weight_distribution_bruteforce",
]
