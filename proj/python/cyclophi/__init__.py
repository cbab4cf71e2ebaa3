"""Exact cyclotomic-coefficient engines, census scans, and symmetry diagnostics."""

from ._core import (
    OverflowError,
    OddSquarefreeProfile,
    TheoremMainReport,
    __version__,
    coefficient_value_set,
    divisors,
    factorize,
    hausdorff,
    is_prime,
    mobius,
    odd_squarefree_profile,
    phi_coefficients,
    power_sum,
    power_sum_general,
    radical,
    scan_census,
    scan_first_appearances,
    sigma_closed_form,
    sigma_prefix,
    symmetry_report,
    totient,
    verify_theorem_main,
)

__all__ = [
    "OverflowError",
    "OddSquarefreeProfile",
    "TheoremMainReport",
    "__version__",
    "coefficient_value_set",
    "divisors",
    "factorize",
    "hausdorff",
    "is_prime",
    "mobius",
    "odd_squarefree_profile",
    "phi_coefficients",
    "power_sum",
    "power_sum_general",
    "radical",
    "scan_census",
    "scan_first_appearances",
    "sigma_closed_form",
    "sigma_prefix",
    "symmetry_report",
    "totient",
    "verify_theorem_main",
]
