"""
按次数切片的张量核

总次数为 D 的齐次元素存为 {p: 0/1 矩阵}，矩阵形状 (dim W^p, dim W^{D-p})，
行列是两个次数片内的基编号偏移。乘以 z(w̃_i) 时左乘 L_i^{(p)}、右乘
(L_i^{(D-p)})^T，全零块直接丢弃。

uint8 矩阵乘法按 256 回绕，奇偶性不变，最后统一 & 1。
"""

from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from ..quotient import AlgebraMismatchError, QuotientAlgebra
from .tensor import TensorElement


def _accumulate(blocks: Dict[int, np.ndarray], p: int, m: np.ndarray):
    if p in blocks:
        blocks[p] = blocks[p] + m
    else:
        blocks[p] = m


def _finish(blocks: Dict[int, np.ndarray]) -> Dict[int, np.ndarray]:
    out = {}
    for p, m in blocks.items():
        m = m & 1
        if m.any():
            out[p] = m
    return out


@dataclass(frozen=True, eq=False)
class SlicedTensor:
    """W ⊗ W 中总次数为 degree 的齐次元素"""

    algebra: QuotientAlgebra
    degree: int
    blocks: Mapping[int, np.ndarray] = field(default_factory=dict)

    @classmethod
    def unit(cls, A: QuotientAlgebra) -> "SlicedTensor":
        """1 ⊗ 1"""
        return cls(A, 0, {0: np.ones((1, 1), dtype=np.uint8)})

    @classmethod
    def from_element(cls, x: TensorElement) -> "SlicedTensor":
        degree = x.degree
        A = x.algebra
        if degree is None:
            return cls(A, 0, {})
        if degree == "mixed":
            raise ValueError("只能切片齐次张量元素")
        blocks: Dict[int, np.ndarray] = {}
        for i, j in x.terms:
            p = A.degrees[i]
            if p not in blocks:
                blocks[p] = np.zeros((A.slice_dimension(p), A.slice_dimension(degree - p)), dtype=np.uint8)
            blocks[p][i - A.degree_slice(p)[0], j - A.degree_slice(degree - p)[0]] = 1
        return cls(A, degree, blocks)

    def to_element(self) -> TensorElement:
        A = self.algebra
        pairs = set()
        for p, m in self.blocks.items():
            left0 = A.degree_slice(p)[0]
            right0 = A.degree_slice(self.degree - p)[0]
            for row, col in np.argwhere(m):
                pairs.add((left0 + int(row), right0 + int(col)))
        return TensorElement(A, frozenset(pairs))

    def is_zero(self) -> bool:
        return not self.blocks

    def __bool__(self) -> bool:
        return bool(self.blocks)

    @property
    def nbytes(self) -> int:
        return sum(m.nbytes for m in self.blocks.values())

    def term_count(self) -> int:
        return int(sum(int(m.sum()) for m in self.blocks.values()))

    def __add__(self, other: "SlicedTensor") -> "SlicedTensor":
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise AlgebraMismatchError("两个张量元素不属于同一个代数")
        if not other.blocks:
            return self
        if not self.blocks:
            return other
        if self.degree != other.degree:
            raise ValueError(f"次数不同的齐次元素不能相加: {self.degree} != {other.degree}")
        blocks = dict(self.blocks)
        for p, m in other.blocks.items():
            _accumulate(blocks, p, m)
        return SlicedTensor(self.algebra, self.degree, _finish(blocks))

    def times_z(self, pos: int) -> "SlicedTensor":
        """乘以 z(w̃_{pos+2}) = 1 ⊗ w̃ + w̃ ⊗ 1"""
        A = self.algebra
        weight = pos + 2
        D = self.degree
        blocks: Dict[int, np.ndarray] = {}
        for p, m in self.blocks.items():
            left = A.block(pos, p)
            if left is not None:
                _accumulate(blocks, p + weight, left @ m)
            right = A.block(pos, D - p)
            if right is not None:
                _accumulate(blocks, p, m @ right.T)
        return SlicedTensor(A, D + weight, _finish(blocks))

    def times_simple(self, pos: int, left_exp: int, right_exp: int) -> "SlicedTensor":
        """乘以 w̃^left_exp ⊗ w̃^right_exp（w̃ = w̃_{pos+2}）"""
        A = self.algebra
        weight = pos + 2
        D = self.degree
        blocks: Dict[int, np.ndarray] = {}
        for p, m in self.blocks.items():
            lp, rp = p, D - p
            for _ in range(left_exp):
                step = A.block(pos, lp)
                if step is None:
                    m = None
                    break
                m = (step @ m) & 1
                lp += weight
            if m is None:
                continue
            for _ in range(right_exp):
                step = A.block(pos, rp)
                if step is None:
                    m = None
                    break
                m = (m @ step.T) & 1
                rp += weight
            if m is not None:
                _accumulate(blocks, lp, m)
        return SlicedTensor(A, D + weight * (left_exp + right_exp), _finish(blocks))

    def swap(self) -> "SlicedTensor":
        """交换两个张量因子"""
        return SlicedTensor(self.algebra, self.degree,
                            {self.degree - p: np.ascontiguousarray(m.T) for p, m in self.blocks.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SlicedTensor):
            return NotImplemented
        if not self.blocks and not other.blocks:
            return True
        if self.degree != other.degree or self.blocks.keys() != other.blocks.keys():
            return False
        return all(np.array_equal(m, other.blocks[p]) for p, m in self.blocks.items())

    def contains(self, left: int, right: int) -> bool:
        """项 b_left ⊗ b_right 是否出现"""
        A = self.algebra
        p = A.degrees[left]
        m = self.blocks.get(p)
        if m is None or A.degrees[right] != self.degree - p:
            return False
        return bool(m[left - A.degree_slice(p)[0], right - A.degree_slice(self.degree - p)[0]])

    def sample_term(self) -> Optional[Tuple[int, int]]:
        """左次数最小的块中第一个非零项 (左编号, 右编号)"""
        if not self.blocks:
            return None
        A = self.algebra
        p = min(self.blocks)
        row, col = np.argwhere(self.blocks[p])[0]
        return A.degree_slice(p)[0] + int(row), A.degree_slice(self.degree - p)[0] + int(col)
