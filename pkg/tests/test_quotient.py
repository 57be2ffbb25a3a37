"""
单元测试：商代数 W_{n,k} 的构造、乘法、高度与杯长
"""

import numpy as np
import pytest

from conftest import DEFAULT_SEED
from swalg.f2poly import Monomial, PolynomialF2, PolyRing, parse
from swalg.groebner import GroebnerBasis
from swalg.grassmann import IdealSpec
from swalg.quotient import (
    AlgebraMismatchError,
    InfiniteQuotientError,
    QuotientAlgebra,
    build_algebra,
    cup_length_W,
    dim_profile,
    height,
    heights,
    low_degree_vanishing,
    multiply,
)

HEIGHTS = {
    8: (4, 2, 3), 9: (4, 2, 3),
    14: (12, 6, 5), 15: (12, 6, 6),
    16: (12, 6, 7), 17: (12, 6, 7),
}

DIMENSIONS = {14: 77, 15: 105, 16: 140}


def _random_poly(ring: PolyRing, rng: np.random.Generator, n_terms: int = 4, max_exp: int = 4):
    return PolynomialF2(ring, (
        ring.pack([int(e) for e in rng.integers(0, max_exp + 1, size=ring.variables.nvars)])
        for _ in range(n_terms)
    ))


# ============================================================================
# 结构
# ============================================================================

def test_w_8_3_basis_and_profile(algebra):
    A = algebra(8, 3)
    assert A.dimension == 7
    assert dim_profile(A) == [(0, 1), (1, 0), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 0), (8, 1)]
    assert A.basis_monomial(0) == Monomial((0, 0))
    assert A.basis_monomial(A.dimension - 1) == Monomial((1, 2))


@pytest.mark.parametrize("n,dim", sorted(DIMENSIONS.items()))
def test_dimensions(algebra, n, dim):
    assert algebra(n).dimension == dim


def test_profile_sums_to_dimension(algebra):
    A = algebra(16)
    assert sum(d for _, d in dim_profile(A)) == A.dimension
    assert A.degrees == tuple(sorted(A.degrees))


def test_w8_and_w9_share_basis(algebra):
    A8, A9 = algebra(8), algebra(9)
    assert A8.basis == A9.basis
    assert A8.gen_tables == A9.gen_tables
    assert A8 != A9


def test_build_algebra_is_memoized():
    spec = IdealSpec(n=15, k=4)
    assert build_algebra(spec) is build_algebra(spec)


def test_infinite_quotient_rejected():
    R = PolyRing.for_k(4)
    gb = GroebnerBasis((parse("w2^3", R),))
    with pytest.raises(InfiniteQuotientError, match="纯幂首项"):
        QuotientAlgebra(IdealSpec(n=8, k=4), gb)


def test_blocks_agree_with_generator_matrices(algebra):
    A = algebra(14)
    for pos in range(A.n_generators):
        full = A.generator_matrix(pos + 2)
        for degree in range(A.top_degree + 1):
            start, stop = A.degree_slice(degree)
            t_start, t_stop = A.degree_slice(degree + pos + 2)
            expected = full[t_start:t_stop, start:stop]
            block = A.block(pos, degree)
            if block is None:
                assert not expected.any()
            else:
                assert np.array_equal(block, expected)
                assert block.dtype == np.uint8


# ============================================================================
# 元素与乘法
# ============================================================================

def test_element_degree(algebra):
    A = algebra(16)
    assert A.zero().degree is None
    assert A.one().degree == 0
    assert A.generator(3).degree == 3
    assert (A.generator(2) + A.generator(3)).degree == "mixed"


def test_element_reduces_to_normal_form(algebra):
    A = algebra(8, 3)
    assert A.element("w2^3") == A.element("w3^2")
    assert A.element("w2^2*w3").is_zero()
    assert str(A.element("w2^3")) == "w3^2"


def test_products_in_small_algebras(algebra):
    A8 = algebra(8)
    assert A8.generator(2) ** 4 * A8.generator(4)
    A16 = algebra(16)
    assert not A16.generator(3) ** 7
    assert A16.generator(3) ** 6


@pytest.mark.parametrize("n", [8, 14, 16])
def test_multiply_matches_polynomial_product(algebra, n):
    """表驱动乘法与“多项式相乘再取范式”一致"""
    A = algebra(n)
    rng = np.random.default_rng(DEFAULT_SEED + n)
    for _ in range(20):
        p, q = _random_poly(A.ring, rng), _random_poly(A.ring, rng)
        assert multiply(A.element(p), A.element(q)) == A.element(p * q)


def test_multiplication_is_commutative_and_associative(algebra):
    A = algebra(15)
    rng = np.random.default_rng(DEFAULT_SEED)
    for _ in range(10):
        a, b, c = (A.element(_random_poly(A.ring, rng, max_exp=3)) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * A.one() == a


def test_mismatched_algebras(algebra):
    with pytest.raises(AlgebraMismatchError):
        algebra(8).generator(2) + algebra(9).generator(2)
    with pytest.raises(AlgebraMismatchError):
        algebra(8).generator(2) * algebra(9).generator(2)


def test_element_coordinates_bounded(algebra):
    from swalg.quotient import AlgebraElement

    A = algebra(8, 3)
    with pytest.raises(ValueError):
        AlgebraElement(A, 1 << A.dimension)


def test_to_polynomial_round_trip(algebra):
    A = algebra(14)
    e = A.element("w2^3*w3 + w4^2 + w2*w3^3")
    assert A.element(e.to_polynomial()) == e


# ============================================================================
# 不变量
# ============================================================================

@pytest.mark.parametrize("n", sorted(HEIGHTS))
def test_heights(algebra, n):
    A = algebra(n)
    h2, h3, h4 = HEIGHTS[n]
    assert heights(A) == {"w2": h2, "w3": h3, "w4": h4}
    assert height(A, 4) == h4


def test_heights_grow_with_n(algebra):
    """I_{n+1} ⊆ I_n，所以 W_n 是 W_{n+1} 的商，高度随 n 不减"""
    for n in (8, 14, 15, 16):
        lower, upper = heights(algebra(n)), heights(algebra(n + 1))
        assert all(lower[name] <= upper[name] for name in lower), n


@pytest.mark.slow
@pytest.mark.parametrize("n,expected", [(30, (28, 14, 13)), (31, (28, 14, 14)),
                                        (32, (28, 14, 15)), (33, (28, 14, 15))])
def test_heights_t5(algebra, n, expected):
    A = algebra(n)
    assert tuple(heights(A).values()) == expected
    if n == 30:
        assert A.dimension == 945


def test_cup_length(algebra):
    cl, witness = cup_length_W(algebra(16))
    assert cl == 15
    assert witness.total_exponent == 15
    assert algebra(16).monomial_element(witness.exponents)
    assert algebra(16).monomial_element((12, 0, 3))


def test_cup_length_small_and_isomorphic(algebra):
    assert cup_length_W(algebra(8))[0] == 5
    assert cup_length_W(algebra(9))[0] == 5
    assert cup_length_W(algebra(17))[0] == cup_length_W(algebra(16))[0]


def test_low_degree_vanishing(algebra):
    assert low_degree_vanishing(algebra(14), 4) == {'a': True, 'b': True, 'c': True}
    with pytest.raises(ValueError):
        low_degree_vanishing(algebra(15), 4)


@pytest.mark.slow
@pytest.mark.parametrize("n", [32, 33])
def test_cup_length_t5(algebra, n):
    cl, witness = cup_length_W(algebra(n))
    assert cl == 35
    assert algebra(n).monomial_element((28, 0, 7))


@pytest.mark.slow
def test_low_degree_vanishing_t5(algebra):
    assert low_degree_vanishing(algebra(30), 5) == {'a': True, 'b': True, 'c': True}
