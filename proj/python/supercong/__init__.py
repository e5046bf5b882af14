"""Python access to the supercongruence verifiers."""

from ._core import (
    Error,
    central_identity_check,
    exact_theorem12_sum,
    explore_valuation,
    is_prime,
    lemma21_check,
    lemma22_check,
    proof_step_check,
    report_lines,
    run_grid,
    sieve,
    theorem11_lhs1,
    theorem11_second,
    theorem12_residue,
    wolstenholme_check,
)

__all__ = [
    "Error",
    "central_identity_check",
    "exact_theorem12_sum",
    "explore_valuation",
    "is_prime",
    "lemma21_check",
    "lemma22_check",
    "proof_step_check",
    "report_lines",
    "run_grid",
    "sieve",
    "theorem11_lhs1",
    "theorem11_second",
    "theorem12_residue",
    "wolstenholme_check",
]
