"""
GF(2) 上的多元多项式

项集合存放为打包单项式的降序元组（按所属环的单项式序），首项即 terms[0]。
特征 2 下加法就是项集合的对称差。所有对象构造后不可变，可在线程/进程间共享。
"""

from typing import Iterable, List, Optional, Sequence

from .ring import (
    Monomial,
    MonomialOrder,
    PolyRing,
    VariableSetMismatchError,
    ZeroPolynomialError,
)


def _toggle_sorted(keys: Iterable[int]) -> tuple:
    acc = set()
    for key in keys:
        if key in acc:
            acc.remove(key)
        else:
            acc.add(key)
    return tuple(sorted(acc, reverse=True))


class PolynomialF2:
    """F2[w2..wk] 中的多项式"""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Iterable[int] = (), *, normalized: bool = False):
        """
        Args:
            ring: 所属多项式环
            terms: 打包单项式；重复项按 GF(2) 成对抵消
            normalized: 调用方保证 terms 已去重且降序时置 True
        """
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", tuple(terms) if normalized else _toggle_sorted(terms))

    def __setattr__(self, name, value):
        raise AttributeError("PolynomialF2 is immutable")

    def __reduce__(self):
        return (_rebuild, (self.ring, self.terms))

    # ------------------------------------------------------------------
    # 构造

    @classmethod
    def zero(cls, ring: PolyRing) -> "PolynomialF2":
        return cls(ring, (), normalized=True)

    @classmethod
    def one(cls, ring: PolyRing) -> "PolynomialF2":
        return cls(ring, (0,), normalized=True)

    @classmethod
    def variable(cls, ring: PolyRing, index: int) -> "PolynomialF2":
        return cls(ring, (ring.variable_key(index),), normalized=True)

    @classmethod
    def from_exponents(cls, ring: PolyRing, exponents: Sequence[int]) -> "PolynomialF2":
        return cls(ring, (ring.pack(exponents),), normalized=True)

    @classmethod
    def from_monomials(cls, ring: PolyRing, monomials: Iterable[Monomial]) -> "PolynomialF2":
        return cls(ring, (ring.from_monomial(m) for m in monomials))

    # ------------------------------------------------------------------
    # 基本属性

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolynomialF2):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    def __repr__(self) -> str:
        return f"PolynomialF2({self})"

    def __str__(self) -> str:
        from .parser import format_polynomial
        return format_polynomial(self)

    @property
    def leading_key(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("零多项式没有首项")
        return self.terms[0]

    def lm(self) -> Monomial:
        return self.ring.to_monomial(self.leading_key)

    def monomials(self) -> List[Monomial]:
        """按当前单项式序降序给出全部单项式"""
        return [self.ring.to_monomial(t) for t in self.terms]

    @property
    def degree(self) -> int:
        """最大加权次数（零多项式为 -1）"""
        return max((self.ring.degree(t) for t in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({self.ring.degree(t) for t in self.terms}) <= 1

    # ------------------------------------------------------------------
    # 运算

    def _check_ring(self, other: "PolynomialF2"):
        if self.ring != other.ring:
            raise VariableSetMismatchError(
                f"环不一致: k={self.ring.k} {self.ring.order_names} vs "
                f"k={other.ring.k} {other.ring.order_names}"
            )

    def __add__(self, other: "PolynomialF2") -> "PolynomialF2":
        self._check_ring(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        return PolynomialF2(
            self.ring, sorted(set(self.terms).symmetric_difference(other.terms), reverse=True),
            normalized=True,
        )

    __sub__ = __add__

    def __mul__(self, other: "PolynomialF2") -> "PolynomialF2":
        self._check_ring(other)
        if not self.terms or not other.terms:
            return PolynomialF2.zero(self.ring)
        if len(other.terms) == 1:
            return self.shift(other.terms[0])
        if len(self.terms) == 1:
            return other.shift(self.terms[0])
        mul_keys = self.ring.mul_keys
        acc = set()
        for a in self.terms:
            for b in other.terms:
                m = mul_keys(a, b)
                if m in acc:
                    acc.remove(m)
                else:
                    acc.add(m)
        return PolynomialF2(self.ring, sorted(acc, reverse=True), normalized=True)

    def shift(self, key: int) -> "PolynomialF2":
        """乘以一个单项式（单项式序的乘法相容性保证降序不变）"""
        if key == 0:
            return self
        check = self.ring.check_key
        return PolynomialF2(self.ring, tuple(check(t + key) for t in self.terms), normalized=True)

    def times_monomial(self, monomial: Monomial) -> "PolynomialF2":
        return self.shift(self.ring.from_monomial(monomial))

    def square(self) -> "PolynomialF2":
        """Frobenius：(Σ m)^2 = Σ m^2"""
        check = self.ring.check_key
        return PolynomialF2(self.ring, tuple(check(t << 1) for t in self.terms), normalized=True)

    def frobenius(self, times: int) -> "PolynomialF2":
        """p^(2^times)"""
        check = self.ring.check_key
        return PolynomialF2(self.ring, tuple(check(t << times) for t in self.terms), normalized=True)

    def __pow__(self, exponent: int) -> "PolynomialF2":
        if exponent < 0:
            raise ValueError("不支持负指数")
        result = PolynomialF2.one(self.ring)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base.square()
        return result

    def divide_by_monomial(self, key: int) -> "PolynomialF2":
        """精确除以单项式；若某项不可整除则抛 ValueError"""
        divides = self.ring.divides
        for t in self.terms:
            if not divides(key, t):
                raise ValueError(
                    f"项 {self.ring.to_monomial(t)} 不能被 {self.ring.to_monomial(key)} 整除"
                )
        return PolynomialF2(self.ring, tuple(t - key for t in self.terms), normalized=True)

    def substitute_zero(self, index: int) -> "PolynomialF2":
        """令 w_index = 0（即模 w_index 约化）"""
        key = self.ring.variable_key(index)
        divides = self.ring.divides
        return PolynomialF2(self.ring, tuple(t for t in self.terms if not divides(key, t)), normalized=True)

    def involves(self, index: int) -> bool:
        return any(self.ring.exponent(t, index) for t in self.terms)

    def embed(self, target: PolyRing) -> "PolynomialF2":
        """按变量名嵌入/投影到另一个环（目标环缺失的变量指数必须为 0）"""
        if target == self.ring:
            return self
        mapping = self.ring.repack_map(target)
        nvars = target.variables.nvars
        keys = []
        for t in self.terms:
            exps = self.ring.unpack(t)
            new = [0] * nvars
            for pos, e in enumerate(exps):
                if e == 0:
                    continue
                if pos not in mapping:
                    raise VariableSetMismatchError(
                        f"变量 w{pos + 2} 不在目标环 (k={target.k}) 中"
                    )
                new[mapping[pos]] = e
            keys.append(target.pack(new))
        return PolynomialF2(target, keys)

    def with_order(self, order: MonomialOrder) -> "PolynomialF2":
        return self.embed(PolyRing(self.ring.variables, order))


def _rebuild(ring: PolyRing, terms: tuple) -> PolynomialF2:
    return PolynomialF2(ring, terms, normalized=True)


def add(p: PolynomialF2, q: PolynomialF2) -> PolynomialF2:
    """p + q（对称差）"""
    return p + q


def mul(p: PolynomialF2, q: PolynomialF2) -> PolynomialF2:
    """p * q，碰撞的单项式成对抵消"""
    return p * q


def leading_monomial(p: PolynomialF2, order: Optional[MonomialOrder] = None) -> Monomial:
    """LM(p) = max M(p)（给定单项式序下）"""
    if p.is_zero():
        raise ZeroPolynomialError("零多项式没有首项")
    if order is None or order == p.ring.order:
        return p.lm()
    return p.with_order(order).lm()
