"""
W ⊗ W 的稀疏元素

项是基编号对 (左, 右)；GF(2) 上不存系数，重复的项相互抵消。
特征 2 下张量积乘法没有符号。
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Set, Tuple, Union

from ..quotient import AlgebraElement, AlgebraMismatchError, QuotientAlgebra
from ..quotient.algebra import iter_bits

Pair = Tuple[int, int]


def _toggle(pairs: Iterable[Pair]) -> FrozenSet[Pair]:
    acc: Set[Pair] = set()
    for pair in pairs:
        acc ^= {pair}
    return frozenset(acc)


@dataclass(frozen=True)
class TensorElement:
    """W ⊗ W 中的元素

    Attributes:
        algebra: 所属代数 W
        terms: 基编号对集合
    """

    algebra: QuotientAlgebra
    terms: FrozenSet[Pair] = frozenset()

    def __post_init__(self):
        dim = self.algebra.dimension
        for left, right in self.terms:
            if not (0 <= left < dim and 0 <= right < dim):
                raise ValueError(f"基编号 ({left}, {right}) 超出维数 {dim}")

    @classmethod
    def one(cls, A: QuotientAlgebra) -> "TensorElement":
        return cls(A, frozenset({(0, 0)}))

    @classmethod
    def from_pairs(cls, A: QuotientAlgebra, pairs: Iterable[Pair]) -> "TensorElement":
        """由可能重复的项构造（重复项成对抵消）"""
        return cls(A, _toggle(pairs))

    @classmethod
    def from_elements(cls, left: AlgebraElement, right: AlgebraElement) -> "TensorElement":
        """left ⊗ right"""
        if left.algebra != right.algebra:
            raise AlgebraMismatchError("张量因子不属于同一个代数")
        return cls(left.algebra, frozenset(
            (i, j) for i in iter_bits(left.coords) for j in iter_bits(right.coords)))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "TensorElement"):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise AlgebraMismatchError("两个张量元素不属于同一个代数")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        return TensorElement(self.algebra, self.terms ^ other.terms)

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        return tensor_multiply(self, other)

    def __pow__(self, exponent: int) -> "TensorElement":
        result = TensorElement.one(self.algebra)
        for _ in range(exponent):
            result = result * self
            if not result:
                break
        return result

    def bidegrees(self) -> Set[Tuple[int, int]]:
        degrees = self.algebra.degrees
        return {(degrees[i], degrees[j]) for i, j in self.terms}

    @property
    def degree(self) -> Union[int, str, None]:
        """总次数；非齐次为 "mixed"，零元素为 None"""
        totals = {p + q for p, q in self.bidegrees()}
        if not totals:
            return None
        if len(totals) > 1:
            return "mixed"
        return totals.pop()

    def swap(self) -> "TensorElement":
        """交换两个张量因子"""
        return TensorElement(self.algebra, frozenset((j, i) for i, j in self.terms))

    def to_strings(self) -> list:
        """[(左单项式, 右单项式)]，按编号排序"""
        A = self.algebra
        return [(str(A.basis_monomial(i)), str(A.basis_monomial(j))) for i, j in sorted(self.terms)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{u} ⊗ {v}" for u, v in self.to_strings())


def z_of_generator(A: QuotientAlgebra, i: int) -> TensorElement:
    """z(w̃_i) = 1 ⊗ w̃_i + w̃_i ⊗ 1"""
    w = A.generator(i)
    one = A.one()
    return TensorElement.from_elements(one, w) + TensorElement.from_elements(w, one)


def tensor_multiply(x: TensorElement, y: TensorElement) -> TensorElement:
    """(a ⊗ b)(c ⊗ d) = ac ⊗ bd，双线性展开后在 GF(2) 上抵消"""
    x._check(y)
    A = x.algebra
    acc: Set[Pair] = set()
    for a, b in x.terms:
        for c, d in y.terms:
            left = A.apply_basis(1 << a, c)
            if not left:
                continue
            right = A.apply_basis(1 << b, d)
            if not right:
                continue
            acc ^= {(i, j) for i in iter_bits(left) for j in iter_bits(right)}
    return TensorElement(A, frozenset(acc))


def mu(x: TensorElement) -> AlgebraElement:
    """乘法映射 W ⊗ W -> W"""
    A = x.algebra
    coords = 0
    for a, b in x.terms:
        coords ^= A.apply_basis(1 << a, b)
    return AlgebraElement(A, coords)
