"""
quotient：有限维分次代数 W_{n,k}：标准单项式基、生成元乘法表、高度与杯长
"""

from .algebra import (
    AlgebraElement,
    AlgebraMismatchError,
    InfiniteQuotientError,
    QuotientAlgebra,
    QuotientError,
    build_algebra,
    dim_profile,
    multiply,
)
from .invariants import cup_length_W, height, heights, low_degree_vanishing

__all__ = [
    "AlgebraElement",
    "AlgebraMismatchError",
    "InfiniteQuotientError",
    "QuotientAlgebra",
    "QuotientError",
    "build_algebra",
    "cup_length_W",
    "dim_profile",
    "height",
    "heights",
    "low_degree_vanishing",
    "multiply",
]
