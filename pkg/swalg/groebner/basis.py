"""
Gröbner 基、范式约化与标准单项式

normal_form 做完全约化（尾项也约化），因此结果是商环中的规范陪集代表元。
约化子选择：在首项整除当前项的生成元中取首项最小者。
"""

from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush
from typing import Iterable, List, Optional, Sequence, Tuple

from ..f2poly import Monomial, MonomialOrder, PolynomialF2, PolyRing, VariableSetMismatchError, ZeroPolynomialError


class GroebnerError(Exception):
    """groebner 模块错误基类"""


class EmptyBasisError(GroebnerError, ValueError):
    """空生成元集合"""


@dataclass(frozen=True)
class GroebnerBasis:
    """生成元列表 + 单项式序 + 首项缓存 + 是否约化

    Attributes:
        generators: 非零多项式（同一个环）
        reduced: 是否为约化 Gröbner 基（按首项升序排列）
    """

    generators: Tuple[PolynomialF2, ...]
    reduced: bool = False
    ring: PolyRing = field(init=False, compare=False)
    lms: Tuple[int, ...] = field(init=False, compare=False, repr=False)
    # (lm, tail) 按首项升序，供约化使用
    _reducers: Tuple[Tuple[int, Tuple[int, ...]], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise EmptyBasisError("Gröbner 基至少需要一个生成元")
        ring = gens[0].ring
        for g in gens:
            if g.is_zero():
                raise ZeroPolynomialError("Gröbner 基的生成元不能为零")
            if g.ring != ring:
                raise VariableSetMismatchError("生成元不在同一个环中")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "lms", tuple(g.leading_key for g in gens))
        reducers = sorted(((g.terms[0], g.terms[1:]) for g in gens), key=lambda r: r[0])
        object.__setattr__(self, "_reducers", tuple(reducers))

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def __len__(self) -> int:
        return len(self.generators)

    def lm_monomials(self) -> List[Monomial]:
        return [self.ring.to_monomial(m) for m in self.lms]

    def lm_set(self) -> frozenset:
        return frozenset(self.lm_monomials())

    def with_order(self, order: MonomialOrder) -> "GroebnerBasis":
        """换序后的生成元集合（不保证仍是 Gröbner 基）"""
        return GroebnerBasis(tuple(g.with_order(order) for g in self.generators))


def _as_ring(p: PolynomialF2, ring: PolyRing) -> PolynomialF2:
    return p if p.ring == ring else p.embed(ring)


def reduce_terms(terms: Iterable[int], ring: PolyRing,
                 reducers: Sequence[Tuple[int, Tuple[int, ...]]]) -> Tuple[int, ...]:
    """对打包项集合做完全约化，返回降序的余式项

    从大到小处理当前项：可约则用首项最小的约化子消去，否则移入余式。
    消去引入的新项都严格小于当前项，所以已处理过的项不会再次出现。
    """
    divides = ring.divides
    check = ring.check_key
    current = set()
    for t in terms:
        if t in current:
            current.remove(t)
        else:
            current.add(t)
    heap = [-t for t in current]
    heapify(heap)
    remainder = []
    while heap:
        t = -heappop(heap)
        if t not in current:
            continue
        current.remove(t)
        for lm, tail in reducers:
            if divides(lm, t):
                m = t - lm
                for u in tail:
                    s = check(m + u)
                    if s in current:
                        current.remove(s)
                    else:
                        current.add(s)
                        heappush(heap, -s)
                break
        else:
            remainder.append(t)
    return tuple(remainder)


def normal_form(p: PolynomialF2, F: GroebnerBasis) -> PolynomialF2:
    """p 模 F 的范式（完全约化，结果中没有任何项被 F 的首项整除）"""
    p = _as_ring(p, F.ring)
    if p.is_zero():
        return p
    return PolynomialF2(F.ring, reduce_terms(p.terms, F.ring, F._reducers), normalized=True)


def reduce_by(p: PolynomialF2, polys: Sequence[PolynomialF2]) -> PolynomialF2:
    """对任意（不必是 Gröbner 基的）多项式列表做完全约化"""
    if not polys or p.is_zero():
        return p
    reducers = sorted(((g.terms[0], g.terms[1:]) for g in polys), key=lambda r: r[0])
    return PolynomialF2(p.ring, reduce_terms(p.terms, p.ring, reducers), normalized=True)


def s_polynomial(f: PolynomialF2, g: PolynomialF2, order: Optional[MonomialOrder] = None) -> PolynomialF2:
    """S(f, g) = (lcm/LM f)·f + (lcm/LM g)·g"""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("S 多项式的输入不能为零")
    if f.ring != g.ring:
        raise VariableSetMismatchError("S 多项式的两个输入不在同一个环中")
    if order is not None and order != f.ring.order:
        f, g = f.with_order(order), g.with_order(order)
    ring = f.ring
    a, b = f.leading_key, g.leading_key
    lcm = ring.lcm(a, b)
    return f.shift(lcm - a) + g.shift(lcm - b)


def is_groebner(F: GroebnerBasis) -> bool:
    """Buchberger 判据：所有 S 多项式都约化为 0（首项互素的对自动满足）"""
    gens = F.generators
    ring = F.ring
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if ring.coprime(F.lms[i], F.lms[j]):
                continue
            s = s_polynomial(gens[i], gens[j])
            if s and normal_form(s, F):
                return False
    return True


def contains(F: GroebnerBasis, p: PolynomialF2) -> bool:
    """p ∈ <F> 当且仅当 normal_form(p, F) = 0"""
    return normal_form(p, F).is_zero()


def is_standard(F: GroebnerBasis, key: int) -> bool:
    divides = F.ring.divides
    return not any(divides(lm, key) for lm in F.lms)


def standard_monomials(F: GroebnerBasis, degree: int) -> List[Monomial]:
    """加权次数恰为 degree、且不被任何首项整除的单项式（升序）"""
    ring = F.ring
    keys = [ring.pack(exps) for exps in ring.monomials_of_degree(degree)]
    keys = sorted(k for k in keys if is_standard(F, k))
    return [ring.to_monomial(k) for k in keys]


def is_reduced_basis(generators: Sequence[PolynomialF2]) -> bool:
    """约化条件：首项升序，且任何项都不被其他生成元的首项整除"""
    if not generators:
        return False
    ring = generators[0].ring
    lms = [g.leading_key for g in generators]
    if lms != sorted(lms) or len(set(lms)) != len(lms):
        return False
    for i, g in enumerate(generators):
        for j, lm in enumerate(lms):
            if i != j and any(ring.divides(lm, t) for t in g.terms):
                return False
    return True
