"""Certificates for the action of T(n).<iota> on the cohomology of
generalized Kummer manifolds K_{n-1}(A)."""

from ._core import (
    Form,
    InputError,
    build_tau_tilde,
    certify,
    check_fixed_locus_symplectic,
    compose,
    divisors,
    element_order,
    euler_kummer,
    fixed_locus,
    kernel_group_size,
    lefschetz_translation,
    lefschetz_trivial,
    run_cli,
    sigma,
    torsion_codegree,
    torsion_order,
)

__all__ = [
    "Form",
    "InputError",
    "build_tau_tilde",
    "certify",
    "check_fixed_locus_symplectic",
    "compose",
    "divisors",
    "element_order",
    "euler_kummer",
    "fixed_locus",
    "kernel_group_size",
    "lefschetz_translation",
    "lefschetz_trivial",
    "run_cli",
    "sigma",
    "torsion_codegree",
    "torsion_order",
]
