"""Exact verification of Dwork-type congruences.

The heavy lifting lives in the compiled extension; this package just
re-exports it.
"""

from ._core import (  # noqa: F401
    padic_ord,
    embed_rational,
    hensel_unit_root,
    gamma_star,
    ct_sequence,
    q_series,
    verify_mev,
    verify_any_m,
    verify_derivative,
    verify_limits,
    verify_main5,
    legendre_truncation,
    count_points_legendre,
    unit_root_legendre,
    unit_root_ct_series,
    kernel_basis,
    psi_tilde,
    cone_check,
    period_series,
    section6_exponents,
)

__all__ = [
    "padic_ord",
    "embed_rational",
    "hensel_unit_root",
    "gamma_star",
    "ct_sequence",
    "q_series",
    "verify_mev",
    "verify_any_m",
    "verify_derivative",
    "verify_limits",
    "verify_main5",
    "legendre_truncation",
    "count_points_legendre",
    "unit_root_legendre",
    "unit_root_ct_series",
    "kernel_basis",
    "psi_tilde",
    "cone_check",
    "period_series",
    "section6_exponents",
]
