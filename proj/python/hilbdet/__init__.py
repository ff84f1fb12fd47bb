"""Exact invariants of codimension-4 schemes cut out by submaximal minors.

Thin wrapper over the compiled module: degree-matrix combinatorics, the
closed-form Betti tables and Hilbert data, the family-dimension formula, the
finite-field rank oracle and the full invariant reports.
"""

try:
    from ._hilbdet import (  # wheel layout: module installed inside the package
        DegreeMatrix,
        degree_matrix_from_json,
        is_nonempty,
        det_degree,
        hb_twists,
        theorem_hypotheses,
        hilbert_burch_table,
        ideal_square_table,
        gulliksen_negard_table,
        hilbert_function,
        hilbert_polynomial,
        degree_and_genus,
        eta,
        epsilon,
        dim_w_formula,
        oracle_check,
        invariant_report,
    )
except ImportError:  # in-tree builds put the module on PYTHONPATH directly
    from _hilbdet import (
        DegreeMatrix,
        degree_matrix_from_json,
        is_nonempty,
        det_degree,
        hb_twists,
        theorem_hypotheses,
        hilbert_burch_table,
        ideal_square_table,
        gulliksen_negard_table,
        hilbert_function,
        hilbert_polynomial,
        degree_and_genus,
        eta,
        epsilon,
        dim_w_formula,
        oracle_check,
        invariant_report,
    )

__all__ = [
    "DegreeMatrix",
    "degree_matrix_from_json",
    "is_nonempty",
    "det_degree",
    "hb_twists",
    "theorem_hypotheses",
    "hilbert_burch_table",
    "ideal_square_table",
    "gulliksen_negard_table",
    "hilbert_function",
    "hilbert_polynomial",
    "degree_and_genus",
    "eta",
    "epsilon",
    "dim_w_formula",
    "oracle_check",
    "invariant_report",
]
