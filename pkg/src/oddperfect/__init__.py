"""Divisor sums, Euler and Touchard forms, and a perfect-number scanner."""

from oddperfect.arithmetic import (
    Factorization,
    factorize,
    is_perfect,
    is_prime,
    sigma,
    sigma_prime_power,
)
from oddperfect.forms import (
    EulerForm,
    Exclusion,
    ExclusionReason,
    RefinedForm,
    TouchardClass,
    euler_decompose,
    kuhnel_check,
    refined_classify,
    touchard_class_direct,
    touchard_from_euler,
)

__all__ = [
    "Factorization",
    "factorize",
    "is_perfect",
    "is_prime",
    "sigma",
    "sigma_prime_power",
    "EulerForm",
    "Exclusion",
    "ExclusionReason",
    "RefinedForm",
    "TouchardClass",
    "euler_decompose",
    "kuhnel_check",
    "refined_classify",
    "touchard_class_direct",
    "touchard_from_euler",
]
