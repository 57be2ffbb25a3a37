"""
变量集、单项式序与打包指数表示

单项式在热路径中表示为一个 Python 整数：每个变量占 17 位（低 16 位为指数，
最高位为保护位），按单项式序的优先级从高位到低位排列。于是：

- 纯字典序比较 = 整数比较
- 单项式乘法 = 整数加法（保护位检测溢出）
- 整除判定 = 一次带保护位的减法
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Sequence, Tuple

EXP_BITS = 16
FIELD_BITS = EXP_BITS + 1
EXP_LIMIT = 1 << EXP_BITS
EXP_MASK = EXP_LIMIT - 1

MAX_K = 8


class F2PolyError(Exception):
    """f2poly 模块错误基类"""


class VariableSetMismatchError(F2PolyError, ValueError):
    """两个多项式不在同一个环中"""


class ExponentOverflowError(F2PolyError, OverflowError):
    """指数超出 2^16 表示上界"""


class ZeroPolynomialError(F2PolyError, ValueError):
    """对零多项式求首项等"""


@dataclass(frozen=True)
class VariableSet:
    """变量 w2, ..., wk，wi 的权重为 i"""

    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or not 2 <= self.k <= MAX_K:
            raise ValueError(f"k 必须满足 2 <= k <= {MAX_K}，实际为 {self.k!r}")

    @property
    def nvars(self) -> int:
        return self.k - 1

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(f"w{i}" for i in range(2, self.k + 1))

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(range(2, self.k + 1))

    def position(self, index: int) -> int:
        """变量下标 i (wi) -> 指数向量中的位置"""
        if not 2 <= index <= self.k:
            raise ValueError(f"未知变量 w{index}（k={self.k}）")
        return index - 2


@dataclass(frozen=True)
class MonomialOrder:
    """纯字典序

    Attributes:
        precedence: 变量位置的排列，从最高优先级开始。
            例如 k=4 时 (2, 0, 1) 表示 w4 > w2 > w3。
    """

    precedence: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError(f"precedence 必须是变量位置的排列: {self.precedence}")

    @classmethod
    def natural(cls, variables: VariableSet) -> "MonomialOrder":
        """w2 > w3 > ... > wk"""
        return cls(tuple(range(variables.nvars)))

    @classmethod
    def from_names(cls, variables: VariableSet, names: Sequence[str]) -> "MonomialOrder":
        lookup = {name: pos for pos, name in enumerate(variables.names)}
        try:
            precedence = tuple(lookup[name] for name in names)
        except KeyError as e:
            raise ValueError(f"未知变量 {e.args[0]}，可用变量: {variables.names}") from None
        if len(precedence) != variables.nvars:
            raise ValueError(f"单项式序必须列出全部 {variables.nvars} 个变量")
        return cls(precedence)

    def names(self, variables: VariableSet) -> Tuple[str, ...]:
        return tuple(variables.names[pos] for pos in self.precedence)

    def key(self, exponents: Sequence[int]) -> Tuple[int, ...]:
        """按优先级读出的指数元组（与打包整数同序）"""
        return tuple(exponents[pos] for pos in self.precedence)


def default_order(variables: VariableSet) -> MonomialOrder:
    """默认序：k <= 3 为自然序 w2 > w3；k >= 4 时 wk 最高，其余 w2 > w3 > ..."""
    if variables.k <= 3:
        return MonomialOrder.natural(variables)
    top = variables.nvars - 1
    return MonomialOrder((top,) + tuple(range(top)))


@dataclass(frozen=True)
class Monomial:
    """单项式 w2^e2 ... wk^ek（指数按自然变量顺序存放）"""

    exponents: Tuple[int, ...]
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        for e in exps:
            if e < 0:
                raise ValueError(f"指数不能为负: {exps}")
            if e >= EXP_LIMIT:
                raise ExponentOverflowError(f"指数 {e} 超出上界 2^{EXP_BITS}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum((i + 2) * e for i, e in enumerate(exps)))

    @classmethod
    def one(cls, variables: VariableSet) -> "Monomial":
        return cls((0,) * variables.nvars)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(other.exponents) != len(self.exponents):
            raise VariableSetMismatchError("单项式变量个数不一致")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    @property
    def total_exponent(self) -> int:
        return sum(self.exponents)

    def __str__(self) -> str:
        factors = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                factors.append(f"w{i + 2}")
            elif e > 1:
                factors.append(f"w{i + 2}^{e}")
        return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class PolyRing:
    """F2[w2, ..., wk] 连同一个单项式序，负责打包/解包指数"""

    variables: VariableSet
    order: MonomialOrder
    _shifts: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _guard: int = field(init=False, repr=False, compare=False)
    _weighted_shifts: Tuple[Tuple[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nvars = self.variables.nvars
        if len(self.order.precedence) != nvars:
            raise VariableSetMismatchError(
                f"单项式序有 {len(self.order.precedence)} 个变量，变量集有 {nvars} 个"
            )
        shifts = [0] * nvars
        for rank, pos in enumerate(self.order.precedence):
            shifts[pos] = (nvars - 1 - rank) * FIELD_BITS
        guard = 0
        for s in shifts:
            guard |= 1 << (s + EXP_BITS)
        object.__setattr__(self, "_shifts", tuple(shifts))
        object.__setattr__(self, "_guard", guard)
        object.__setattr__(
            self, "_weighted_shifts",
            tuple((pos + 2, s) for pos, s in enumerate(shifts)),
        )

    @classmethod
    def for_k(cls, k: int, order: MonomialOrder = None) -> "PolyRing":
        variables = VariableSet(k)
        return cls(variables, order or default_order(variables))

    @property
    def k(self) -> int:
        return self.variables.k

    @property
    def order_names(self) -> Tuple[str, ...]:
        return self.order.names(self.variables)

    # ------------------------------------------------------------------
    # 打包 / 解包

    def pack(self, exponents: Sequence[int]) -> int:
        if len(exponents) != self.variables.nvars:
            raise VariableSetMismatchError(
                f"指数向量长度 {len(exponents)} 与变量数 {self.variables.nvars} 不符"
            )
        key = 0
        for e, s in zip(exponents, self._shifts):
            if e < 0:
                raise ValueError(f"指数不能为负: {tuple(exponents)}")
            if e >= EXP_LIMIT:
                raise ExponentOverflowError(f"指数 {e} 超出上界 2^{EXP_BITS}")
            key |= e << s
        return key

    def unpack(self, key: int) -> Tuple[int, ...]:
        return tuple((key >> s) & EXP_MASK for s in self._shifts)

    def to_monomial(self, key: int) -> Monomial:
        return Monomial(self.unpack(key))

    def from_monomial(self, monomial: Monomial) -> int:
        return self.pack(monomial.exponents)

    def variable_key(self, index: int) -> int:
        """变量 w_index 的打包表示"""
        return 1 << self._shifts[self.variables.position(index)]

    def exponent(self, key: int, index: int) -> int:
        return (key >> self._shifts[self.variables.position(index)]) & EXP_MASK

    def degree(self, key: int) -> int:
        return sum(w * ((key >> s) & EXP_MASK) for w, s in self._weighted_shifts)

    # ------------------------------------------------------------------
    # 字运算

    def mul_keys(self, a: int, b: int) -> int:
        m = a + b
        if m & self._guard:
            raise ExponentOverflowError(f"单项式乘积溢出: {self.unpack(a)} * {self.unpack(b)}")
        return m

    def check_key(self, key: int) -> int:
        if key & self._guard:
            raise ExponentOverflowError("单项式指数溢出")
        return key

    def divides(self, a: int, b: int) -> bool:
        """a | b"""
        g = self._guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        key = 0
        for s in self._shifts:
            key |= max((a >> s) & EXP_MASK, (b >> s) & EXP_MASK) << s
        return key

    def coprime(self, a: int, b: int) -> bool:
        return all(((a >> s) & EXP_MASK) == 0 or ((b >> s) & EXP_MASK) == 0 for s in self._shifts)

    def repack_map(self, target: "PolyRing") -> Dict[int, int]:
        """位置映射（按变量名）用于跨环嵌入"""
        names = target.variables.names
        return {pos: names.index(name) for pos, name in enumerate(self.variables.names) if name in names}

    def monomials_of_degree(self, degree: int) -> Iterable[Tuple[int, ...]]:
        """枚举加权次数恰为 degree 的全部指数向量"""
        weights = self.variables.weights

        def _rec(pos: int, remaining: int, prefix: Tuple[int, ...]):
            if pos == len(weights) - 1:
                w = weights[pos]
                if remaining % w == 0:
                    yield prefix + (remaining // w,)
                return
            for e in range(remaining // weights[pos] + 1):
                yield from _rec(pos + 1, remaining - e * weights[pos], prefix + (e,))

        if degree < 0:
            return iter(())
        return _rec(0, degree, ())
