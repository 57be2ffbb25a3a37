"""
交叉验证：与 sympy 在 GF(2) 上计算的约化 Gröbner 基比较
"""

import pytest

sympy = pytest.importorskip("sympy")

from swalg.grassmann import IdealSpec, ideal_generators, reduced_basis


def _support(p, names):
    """多项式的单项式集合，指数按 names 的顺序排列"""
    positions = [int(name[1:]) - 2 for name in names]
    return frozenset(tuple(m.exponents[pos] for pos in positions) for m in p.monomials())


@pytest.mark.parametrize("n,k", [(8, 3), (8, 4), (10, 4)])
def test_reduced_basis_matches_sympy(n, k):
    spec = IdealSpec(n=n, k=k)
    ours = reduced_basis(spec)
    names = ours.ring.order_names
    symbols = dict(zip(names, sympy.symbols(" ".join(names))))

    exprs = [sympy.sympify(str(g).replace("^", "**"), locals=symbols)
             for g in ideal_generators(spec) if g]
    theirs = sympy.groebner(exprs, *symbols.values(), order='lex', modulus=2)

    expected = {frozenset(poly.monoms()) for poly in theirs.polys}
    assert {_support(g, names) for g in ours.generators} == expected
