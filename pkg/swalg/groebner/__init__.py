"""
groebner：范式约化、Buchberger 算法、Gröbner 基验证与标准单项式
"""

from .basis import (
    EmptyBasisError,
    GroebnerBasis,
    GroebnerError,
    contains,
    is_groebner,
    is_reduced_basis,
    is_standard,
    normal_form,
    reduce_by,
    s_polynomial,
    standard_monomials,
)
from .buchberger import buchberger, reduce_groebner_basis

__all__ = [
    "EmptyBasisError",
    "GroebnerBasis",
    "GroebnerError",
    "buchberger",
    "contains",
    "is_groebner",
    "is_reduced_basis",
    "is_standard",
    "normal_form",
    "reduce_by",
    "reduce_groebner_basis",
    "s_polynomial",
    "standard_monomials",
]
