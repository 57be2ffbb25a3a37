"""
单元测试：范式、S 多项式、Buchberger 与 Gröbner 基验证
"""

import numpy as np
import pytest

from swalg.f2poly import Monomial, MonomialOrder, PolyRing, PolynomialF2, ZeroPolynomialError, parse
from swalg.groebner import (
    EmptyBasisError,
    GroebnerBasis,
    buchberger,
    contains,
    is_groebner,
    is_reduced_basis,
    is_standard,
    normal_form,
    reduce_groebner_basis,
    s_polynomial,
    standard_monomials,
)
from swalg.grassmann import IdealSpec, ideal_generators, known_gb

from conftest import DEFAULT_SEED, EXTRA_SEEDS


def basis_8_3():
    """F = {g6, g7, g9}，I_{8,3} 的 Gröbner 基"""
    R = PolyRing.for_k(3)
    return GroebnerBasis(tuple(parse(s, R) for s in ("w2^3 + w3^2", "w2^2*w3", "w3^3")))


def random_poly(ring, rng, n_terms=6, max_exp=6):
    keys = [ring.pack([int(e) for e in rng.integers(0, max_exp + 1, size=ring.variables.nvars)])
            for _ in range(n_terms)]
    return PolynomialF2(ring, keys)


def test_normal_form_examples():
    F = basis_8_3()
    R = F.ring
    assert normal_form(parse("w2^3", R), F) == parse("w3^2", R)
    assert normal_form(parse("w2^2*w3^2", R), F).is_zero()
    assert normal_form(parse("w2*w3", R), F) == parse("w2*w3", R)


def test_normal_form_embeds_smaller_ring():
    F = basis_8_3()
    w3_first = PolyRing.for_k(3, MonomialOrder((1, 0)))
    p = parse("w2^4", w3_first)
    assert normal_form(p, F) == parse("w2*w3^2", F.ring)


def test_s_polynomial():
    R = PolyRing.for_k(3)
    f = parse("w2^3 + w3^2", R)
    g = parse("w2^2*w3", R)
    assert s_polynomial(f, g) == parse("w3^3", R)
    assert s_polynomial(f, f).is_zero()
    with pytest.raises(ZeroPolynomialError):
        s_polynomial(f, PolynomialF2.zero(R))


def test_is_groebner():
    R = PolyRing.for_k(3)
    assert is_groebner(basis_8_3())
    assert not is_groebner(GroebnerBasis((parse("w2^2*w3", R), parse("w2^3 + w3^2", R))))


def test_basis_rejects_bad_generators():
    R = PolyRing.for_k(3)
    with pytest.raises(EmptyBasisError):
        GroebnerBasis(())
    with pytest.raises(ZeroPolynomialError):
        GroebnerBasis((parse("w2", R), PolynomialF2.zero(R)))


def test_buchberger_completes_generators_of_i_8_3():
    """g6, g7, g8 -> 约化基 {w2^3 + w3^2, w2^2 w3, w3^3}"""
    R = PolyRing.for_k(3)
    gens = [parse("w2^3 + w3^2", R), parse("w2^2*w3", R), parse("w2^4 + w2*w3^2", R)]
    G = buchberger(gens)
    assert G.reduced
    assert is_groebner(G)
    assert is_reduced_basis(G.generators)
    assert G.lm_set() == {Monomial((3, 0)), Monomial((2, 1)), Monomial((0, 3))}
    assert set(G.generators) == set(basis_8_3().generators)
    assert [g.leading_key for g in G.generators] == sorted(g.leading_key for g in G.generators)


def test_buchberger_input_errors():
    R = PolyRing.for_k(3)
    with pytest.raises(ValueError):
        buchberger([])
    with pytest.raises(ZeroPolynomialError):
        buchberger([parse("w2", R), PolynomialF2.zero(R)])


def test_buchberger_with_other_order():
    R = PolyRing.for_k(4)
    gens = [parse("w2^2 + w4", R), parse("w3^2 + w2*w4", R)]
    natural = MonomialOrder.natural(R.variables)
    G = buchberger(gens, order=natural)
    assert G.order == natural
    assert is_groebner(G)
    for g in gens:
        assert contains(G, g)


@pytest.mark.parametrize("seed", [DEFAULT_SEED] + EXTRA_SEEDS)
def test_buchberger_basis_decides_membership(seed):
    rng = np.random.default_rng(seed)
    R = PolyRing.for_k(3)
    gens = [random_poly(R, rng, n_terms=3, max_exp=4) for _ in range(2)]
    gens = [g for g in gens if g]
    if not gens:
        pytest.skip("随机生成元全为零")
    G = buchberger(gens)
    assert is_groebner(G)
    for g in gens:
        assert contains(G, g)
    combo = gens[0] * random_poly(R, rng, n_terms=2, max_exp=2)
    assert contains(G, combo)


def test_parallel_buchberger_matches_serial():
    R = PolyRing.for_k(4)
    gens = [parse(s, R) for s in ("w2^3 + w3^2 + w2*w4", "w2^2*w3 + w3*w4", "w4^2 + w2^4")]
    assert buchberger(gens, n_workers=2).generators == buchberger(gens).generators


@pytest.mark.parametrize("seed", [DEFAULT_SEED] + EXTRA_SEEDS)
def test_normal_form_is_canonical(seed):
    """p 与 p + (理想中的元素) 的范式相同，且范式的每一项都是标准单项式"""
    rng = np.random.default_rng(seed)
    F = basis_8_3()
    R = F.ring
    p = random_poly(R, rng)
    member = parse("w2^2*w3", R) * random_poly(R, rng, n_terms=3, max_exp=3)
    nf = normal_form(p, F)
    assert nf == normal_form(p + member, F)
    assert all(is_standard(F, t) for t in nf.terms)
    assert contains(F, p + nf)


def test_standard_monomials():
    F = basis_8_3()
    by_degree = {d: standard_monomials(F, d) for d in range(0, 12)}
    assert sum(len(v) for v in by_degree.values()) == 7
    assert by_degree[6] == [Monomial((0, 2))]
    assert by_degree[7] == []


def test_reduce_groebner_basis_is_unique():
    R = PolyRing.for_k(3)
    F = GroebnerBasis((parse("w2^3 + w3^2", R), parse("w2^2*w3", R), parse("w3^3", R),
                       parse("w2^4 + w2*w3^2", R)))
    reduced = reduce_groebner_basis(F)
    assert len(reduced) == 3
    assert reduced.generators == reduce_groebner_basis(basis_8_3()).generators


@pytest.mark.parametrize("seed", [DEFAULT_SEED] + EXTRA_SEEDS)
def test_normal_form_is_idempotent_and_linear(seed):
    rng = np.random.default_rng(seed)
    F = reduce_groebner_basis(known_gb(14, 4))
    R = F.ring
    for _ in range(10):
        p, q = random_poly(R, rng, max_exp=8), random_poly(R, rng, max_exp=8)
        nf_p = normal_form(p, F)
        assert normal_form(nf_p, F) == nf_p
        assert normal_form(p + q, F) == nf_p + normal_form(q, F)


@pytest.mark.parametrize("seed", [DEFAULT_SEED] + EXTRA_SEEDS)
def test_reduced_basis_ignores_generator_order_and_redundancy(seed):
    """打乱生成元并加入冗余组合后，约化 Gröbner 基不变"""
    rng = np.random.default_rng(seed)
    gens = [g for g in ideal_generators(IdealSpec(n=14, k=4)) if g]
    expected = buchberger(gens).generators

    shuffled = [gens[i] for i in rng.permutation(len(gens))]
    R = gens[0].ring
    redundant = [
        gens[0] * random_poly(R, rng, n_terms=2, max_exp=2) + gens[-1],
        gens[-1] + gens[0] * random_poly(R, rng, n_terms=2, max_exp=2),
    ]
    redundant = [r for r in redundant if r]
    assert buchberger(shuffled + redundant).generators == expected
