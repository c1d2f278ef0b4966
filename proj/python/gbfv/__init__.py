"""Exact cyclotomic certificates and minimal-exponent Diophantine solvers
for generalized bent function nonexistence."""

from ._core import (
    artin_constant,
    contradiction_certificate,
    cyc_str,
    delta_density,
    exhaustive_search,
    fourier_spectrum,
    is_gbf,
    is_self_conjugate,
    min_exponent_q1,
    min_exponent_q2,
    min_exponent_system,
    mult_order,
    norm,
    pair_qualifies,
    scan_divisibility,
    schmidt_F,
    survey,
    verify_foundation,
)

__all__ = [
    "artin_constant",
    "contradiction_certificate",
    "cyc_str",
    "delta_density",
    "exhaustive_search",
    "fourier_spectrum",
    "is_gbf",
    "is_self_conjugate",
    "min_exponent_q1",
    "min_exponent_q2",
    "min_exponent_system",
    "mult_order",
    "norm",
    "pair_qualifies",
    "scan_divisibility",
    "schmidt_F",
    "survey",
    "verify_foundation",
]
