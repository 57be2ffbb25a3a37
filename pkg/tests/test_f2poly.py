"""
单元测试：GF(2) 多项式算术、单项式序与解析
"""

import math

import numpy as np
import pytest

from swalg.f2poly import (
    EXP_LIMIT,
    ExponentOverflowError,
    Monomial,
    MonomialOrder,
    PolyRing,
    PolynomialF2,
    PolynomialSyntaxError,
    VariableSet,
    VariableSetMismatchError,
    ZeroPolynomialError,
    binom_parity,
    default_order,
    leading_monomial,
    multinomial_parity,
    parse,
)
from conftest import DEFAULT_SEED, EXTRA_SEEDS


def ring3():
    return PolyRing.for_k(3)


def ring4():
    return PolyRing.for_k(4)


def test_variable_set():
    vs = VariableSet(4)
    assert vs.names == ("w2", "w3", "w4")
    assert vs.weights == (2, 3, 4)
    assert vs.position(4) == 2
    with pytest.raises(ValueError):
        VariableSet(1)
    with pytest.raises(ValueError):
        VariableSet(9)
    with pytest.raises(ValueError):
        vs.position(5)


def test_default_order():
    assert default_order(VariableSet(3)).names(VariableSet(3)) == ("w2", "w3")
    assert default_order(VariableSet(4)).names(VariableSet(4)) == ("w4", "w2", "w3")
    assert default_order(VariableSet(5)).names(VariableSet(5)) == ("w5", "w2", "w3", "w4")


def test_order_from_names_rejects_partial_or_unknown():
    vs = VariableSet(4)
    assert MonomialOrder.from_names(vs, ["w2", "w3", "w4"]) == MonomialOrder.natural(vs)
    with pytest.raises(ValueError):
        MonomialOrder.from_names(vs, ["w2", "w3"])
    with pytest.raises(ValueError):
        MonomialOrder.from_names(vs, ["w2", "w3", "w9"])
    with pytest.raises(ValueError):
        MonomialOrder((0, 0, 1))


def test_monomial_degree_and_str():
    m = Monomial((2, 1, 1))
    assert m.degree == 2 * 2 + 3 + 4
    assert str(m) == "w2^2*w3*w4"
    assert str(Monomial((0, 0))) == "1"
    assert Monomial((1, 0)).divides(Monomial((2, 1)))
    assert not Monomial((2, 1)).divides(Monomial((1, 0)))
    with pytest.raises(ValueError):
        Monomial((-1, 0))


def test_pure_lex_leading_term():
    """k=4 的默认序中 w4 高于任意 w2 的幂"""
    R = ring4()
    p = parse("w2^100 + w4", R)
    assert p.lm() == Monomial((0, 0, 1))
    assert leading_monomial(p) == Monomial((0, 0, 1))
    assert leading_monomial(p, MonomialOrder.natural(R.variables)) == Monomial((100, 0, 0))


def test_parse_and_format_roundtrip():
    R = ring3()
    p = parse("w3^2 + w2^3", R)
    assert str(p) == "w2^3 + w3^2"
    assert parse(str(p), R) == p
    assert parse("0", R).is_zero()
    assert parse("1", R) == PolynomialF2.one(R)
    assert parse(" w2 * w3 ^ 2 ", R) == PolynomialF2.from_exponents(R, (1, 2))


@pytest.mark.parametrize("text", ["w5", "2", "w2 +", "w2^", "0 + w2", "x2", "05", "01", "00", "10"])
def test_parse_errors(text):
    with pytest.raises(PolynomialSyntaxError):
        parse(text, ring3())


def test_addition_is_symmetric_difference():
    R = ring3()
    p = parse("w2^3 + w3^2", R)
    q = parse("w3^2 + w2*w3", R)
    assert p + q == parse("w2^3 + w2*w3", R)
    assert (p + p).is_zero()
    assert p - q == p + q


def test_multiplication_and_frobenius():
    R = ring4()
    p = parse("w2 + w3 + w4", R)
    assert p * p == parse("w2^2 + w3^2 + w4^2", R)
    assert p.square() == p * p
    assert p.frobenius(3) == p ** 8
    assert (p ** 3) == p * p * p
    assert p * PolynomialF2.zero(R) == PolynomialF2.zero(R)
    assert p ** 0 == PolynomialF2.one(R)


def test_product_is_homogeneous_of_summed_degree():
    R = ring4()
    p = parse("w2^2 + w4", R)
    q = parse("w2*w3 + w2*w3", R) + parse("w3", R)
    assert p.is_homogeneous() and q.is_homogeneous()
    assert (p * q).degree == p.degree + q.degree
    assert (p * q).is_homogeneous()
    assert PolynomialF2.zero(R).degree == -1


def test_ring_mismatch():
    with pytest.raises(VariableSetMismatchError):
        parse("w2", ring3()) + parse("w2", ring4())


def test_zero_polynomial_has_no_leading_term():
    with pytest.raises(ZeroPolynomialError):
        PolynomialF2.zero(ring3()).leading_key


def test_exponent_overflow():
    R = ring3()
    with pytest.raises(ExponentOverflowError):
        R.pack((EXP_LIMIT, 0))
    big = R.pack((EXP_LIMIT - 1, 0))
    with pytest.raises(ExponentOverflowError):
        R.mul_keys(big, big)
    with pytest.raises(ExponentOverflowError):
        PolynomialF2(R, (big,)).square()


def test_packed_divisibility_and_lcm():
    R = ring4()
    a = R.pack((1, 0, 2))
    b = R.pack((3, 1, 2))
    assert R.divides(a, b)
    assert not R.divides(b, a)
    assert R.unpack(R.lcm(R.pack((1, 4, 0)), R.pack((2, 0, 3)))) == (2, 4, 3)
    assert R.coprime(R.pack((1, 0, 0)), R.pack((0, 2, 1)))
    assert R.degree(b) == 6 + 3 + 8


def test_monomials_of_degree():
    R = ring3()
    assert sorted(R.monomials_of_degree(6)) == [(0, 2), (3, 0)]
    assert list(R.monomials_of_degree(1)) == []
    assert list(R.monomials_of_degree(-2)) == []


def test_divide_substitute_embed():
    R3, R4 = ring3(), ring4()
    p = parse("w2^3*w3 + w2*w3^2", R3)
    assert p.divide_by_monomial(R3.pack((1, 1))) == parse("w2^2 + w3", R3)
    with pytest.raises(ValueError):
        p.divide_by_monomial(R3.pack((2, 0)))

    q = parse("w2*w4 + w3^2", R4)
    assert q.substitute_zero(4) == parse("w3^2", R4)
    assert q.involves(4) and not q.substitute_zero(4).involves(4)

    assert p.embed(R4) == parse("w2^3*w3 + w2*w3^2", R4)
    assert q.substitute_zero(4).embed(R3) == parse("w3^2", R3)
    with pytest.raises(VariableSetMismatchError):
        q.embed(R3)


def test_with_order_keeps_the_polynomial():
    R = ring4()
    p = parse("w2^5 + w4 + w3*w4", R)
    natural = p.with_order(MonomialOrder.natural(R.variables))
    assert natural.lm() == Monomial((5, 0, 0))
    assert set(natural.monomials()) == set(p.monomials())


def test_binom_parity():
    assert binom_parity(4, 2) == 0
    assert binom_parity(5, 1) == 1
    assert binom_parity(7, 3) == 1
    assert binom_parity(0, 0) == 1
    with pytest.raises(ValueError):
        binom_parity(3, 4)
    assert multinomial_parity([1, 2, 4]) == 1
    assert multinomial_parity([1, 3]) == 0


def test_overflowing_exponent_is_a_syntax_error():
    """文本中的指数超界按语法错误报告，并给出项的位置"""
    with pytest.raises(PolynomialSyntaxError) as excinfo:
        parse(f"w2 + w3^{EXP_LIMIT}", ring3())
    assert excinfo.value.position == 5
    with pytest.raises(PolynomialSyntaxError):
        parse(f"w2^{EXP_LIMIT - 1}*w2", ring3())


def test_binom_parity_matches_exact_binomials():
    for m in range(513):
        for j in range(m + 1):
            assert binom_parity(m, j) == math.comb(m, j) % 2, (m, j)


# ============================================================================
# 随机性质
# ============================================================================

def random_poly(ring, rng, n_terms=5, max_exp=5):
    keys = [ring.pack([int(e) for e in rng.integers(0, max_exp + 1, size=ring.variables.nvars)])
            for _ in range(n_terms)]
    return PolynomialF2(ring, keys)


@pytest.mark.parametrize("seed", [DEFAULT_SEED] + EXTRA_SEEDS)
def test_ring_laws(seed):
    """加法与乘法满足交换、结合、分配律，且 p + p = 0"""
    rng = np.random.default_rng(seed)
    R = ring4()
    zero = PolynomialF2.zero(R)
    for _ in range(20):
        p, q, r = (random_poly(R, rng) for _ in range(3))
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + p == zero
        assert p + zero == p
        assert p * PolynomialF2.one(R) == p


@pytest.mark.parametrize("seed", [DEFAULT_SEED] + EXTRA_SEEDS)
def test_leading_monomial_is_multiplicative(seed):
    rng = np.random.default_rng(seed)
    for R in (ring3(), ring4()):
        for _ in range(20):
            p, q = random_poly(R, rng), random_poly(R, rng)
            if p.is_zero() or q.is_zero():
                continue
            assert (p * q).lm() == p.lm() * q.lm()


@pytest.mark.parametrize("seed", [DEFAULT_SEED] + EXTRA_SEEDS)
def test_monomial_order_is_a_multiplicative_total_order(seed):
    """打包键的整数比较是全序，与乘法相容，且 1 最小"""
    rng = np.random.default_rng(seed)
    vs = VariableSet(5)
    orders = [default_order(vs), MonomialOrder.natural(vs), MonomialOrder((3, 1, 0, 2))]
    for order in orders:
        R = PolyRing(vs, order)
        one = R.pack((0,) * vs.nvars)
        for _ in range(50):
            a, b, c = (tuple(int(e) for e in rng.integers(0, 8, size=vs.nvars)) for _ in range(3))
            ka, kb, kc = R.pack(a), R.pack(b), R.pack(c)
            assert (ka < kb) + (ka == kb) + (ka > kb) == 1
            assert (ka == kb) == (a == b)
            assert (ka < kb) == (order.key(a) < order.key(b))
            if ka < kb:
                assert R.mul_keys(ka, kc) < R.mul_keys(kb, kc)
            assert one <= ka
            assert R.mul_keys(ka, kc) >= ka
