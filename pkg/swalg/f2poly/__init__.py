"""
f2poly：GF(2) 上的多元多项式算术

变量 w2..wk（权重 i），可配置的纯字典序，打包指数单项式。
"""

from .binomial import binom_parity, multinomial_parity
from .parser import PolynomialSyntaxError, format_polynomial, parse
from .polynomial import PolynomialF2, add, leading_monomial, mul
from .ring import (
    EXP_LIMIT,
    ExponentOverflowError,
    F2PolyError,
    Monomial,
    MonomialOrder,
    PolyRing,
    VariableSet,
    VariableSetMismatchError,
    ZeroPolynomialError,
    default_order,
)

__all__ = [
    "EXP_LIMIT",
    "ExponentOverflowError",
    "F2PolyError",
    "Monomial",
    "MonomialOrder",
    "PolyRing",
    "PolynomialF2",
    "PolynomialSyntaxError",
    "VariableSet",
    "VariableSetMismatchError",
    "ZeroPolynomialError",
    "add",
    "binom_parity",
    "default_order",
    "format_polynomial",
    "leading_monomial",
    "mul",
    "multinomial_parity",
    "parse",
]
