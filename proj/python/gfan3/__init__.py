"""Exact degree components of generic Groebner fans in K[x,y,z].

Ideals are lists of generators; a generator is a list of terms
(num, den, (e1, e2, e3)) meaning (num/den) * x^e1 y^e2 z^e3.
"""

from ._core import (
    DEFAULT_SEED,
    ParseError,
    PreconditionError,
    StabilityError,
    appendix_reduction,
    brute_hull,
    build_matrix_B,
    check_separation,
    det,
    family_bound_report,
    family_ideal,
    fan_component,
    generic_fan,
    gin_lower_bound,
    index_set_J,
    monomial_basis,
    omega_lambda,
    random_experiment,
    random_ideal,
    refine_range,
    witness_change,
)

__all__ = [
    "DEFAULT_SEED",
    "ParseError",
    "PreconditionError",
    "StabilityError",
    "appendix_reduction",
    "brute_hull",
    "build_matrix_B",
    "check_separation",
    "det",
    "family_bound_report",
    "family_ideal",
    "fan_component",
    "generic_fan",
    "gin_lower_bound",
    "index_set_J",
    "monomial_basis",
    "omega_lambda",
    "random_experiment",
    "random_ideal",
    "refine_range",
    "witness_change",
]
