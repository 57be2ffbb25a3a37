"""
grassmann：g 多项式、理想 I_{n,k}、已知 Gröbner 基族与恒等式验证
"""

from .gpoly import GPolynomialTable, g_poly, g_poly_closed
from .identities import (
    IDENTITY_REGISTRY,
    IdentityReport,
    InstanceResult,
    get_identity,
    register_identity,
    verify_identities,
    verify_identity,
)
from .ideals import (
    IdealSpec,
    KnownBasisMismatchError,
    NoKnownBasisError,
    expected_leading_monomials,
    ideal_generators,
    known_family,
    known_gb,
    obtain_basis,
    reduced_basis,
)

__all__ = [
    "GPolynomialTable",
    "IDENTITY_REGISTRY",
    "IdealSpec",
    "IdentityReport",
    "InstanceResult",
    "KnownBasisMismatchError",
    "NoKnownBasisError",
    "expected_leading_monomials",
    "g_poly",
    "g_poly_closed",
    "get_identity",
    "ideal_generators",
    "known_family",
    "known_gb",
    "obtain_basis",
    "reduced_basis",
    "register_identity",
    "verify_identities",
    "verify_identity",
]
