"""
商代数 W_{n,k} ≅ F2[w2..wk] / I_{n,k}

基为标准单项式，按（加权次数，单项式序）升序稠密编号；1 的编号为 0。
元素用 Python 整数位集表示 GF(2) 坐标（第 j 位 = 第 j 个基元素）。
每个生成元 w̃_i 的乘法表 gen_tables[i][j] = normal_form(w_i · b_j) 的位集，
另有按次数切片的 numpy 0/1 矩阵块供张量核使用。
"""

import itertools
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..f2poly import Monomial, PolynomialF2, PolyRing, parse
from ..groebner import GroebnerBasis, normal_form
from ..grassmann import IdealSpec, obtain_basis
from ..performance.cache import LRUCache, entry_key
from swalg.logger_config import get_module_logger

logger = get_module_logger()


class QuotientError(Exception):
    """quotient 模块错误基类"""


class InfiniteQuotientError(QuotientError, ValueError):
    """某个变量没有纯幂首项，商不是有限维的"""


class AlgebraMismatchError(QuotientError, ValueError):
    """两个元素不属于同一个代数"""


def iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class QuotientAlgebra:
    """有限维分次代数 W_{n,k}

    Attributes:
        spec: 理想参数
        gb: 所用的 Gröbner 基
        basis: 基单项式的打包表示（升序编号）
        degrees: 每个基元素的加权次数
        gen_tables: gen_tables[pos][j] 为 w_{pos+2}·b_j 的坐标位集
    """

    def __init__(self, spec: IdealSpec, gb: GroebnerBasis):
        self.spec = spec
        self.gb = gb
        self.ring: PolyRing = gb.ring
        ring = self.ring
        nvars = ring.variables.nvars

        bounds = self._pure_power_bounds()
        keys = []
        for exps in itertools.product(*(range(b) for b in bounds)):
            key = ring.pack(exps)
            if not any(ring.divides(lm, key) for lm in gb.lms):
                keys.append(key)
        keys.sort(key=lambda key: (ring.degree(key), key))

        self.basis: Tuple[int, ...] = tuple(keys)
        self.index: Dict[int, int] = {key: j for j, key in enumerate(keys)}
        self.degrees: Tuple[int, ...] = tuple(ring.degree(key) for key in keys)
        self.top_degree: int = self.degrees[-1] if keys else 0

        self._slices: Dict[int, Tuple[int, int]] = {}
        for j, d in enumerate(self.degrees):
            start, _ = self._slices.get(d, (j, j))
            self._slices[d] = (start, j + 1)

        self.gen_tables: Tuple[Tuple[int, ...], ...] = tuple(
            self._build_table(pos) for pos in range(nvars)
        )
        self._blocks = self._build_blocks()

    # ------------------------------------------------------------------
    # 构造

    def _pure_power_bounds(self) -> List[int]:
        ring = self.ring
        bounds = []
        for pos, name in enumerate(ring.variables.names):
            best = None
            for lm in self.gb.lms:
                exps = ring.unpack(lm)
                if exps[pos] > 0 and sum(exps) == exps[pos]:
                    best = exps[pos] if best is None else min(best, exps[pos])
            if best is None:
                raise InfiniteQuotientError(
                    f"{self.spec}: 变量 {name} 没有纯幂首项，商代数不是有限维的"
                )
            bounds.append(best)
        return bounds

    def _coords_of(self, p: PolynomialF2) -> int:
        coords = 0
        for t in p.terms:
            coords |= 1 << self.index[t]
        return coords

    def _build_table(self, pos: int) -> Tuple[int, ...]:
        var_key = self.ring.variable_key(pos + 2)
        table = []
        for key in self.basis:
            product = key + var_key
            j = self.index.get(product)
            if j is not None:
                table.append(1 << j)
            else:
                nf = normal_form(PolynomialF2(self.ring, (product,), normalized=True), self.gb)
                table.append(self._coords_of(nf))
        return tuple(table)

    def _build_blocks(self) -> Dict[Tuple[int, int], np.ndarray]:
        """(pos, p) -> 乘 w_{pos+2} 从次数 p 到 p+pos+2 的 0/1 矩阵"""
        blocks = {}
        for pos, table in enumerate(self.gen_tables):
            weight = pos + 2
            for p, (start, stop) in self._slices.items():
                target = self._slices.get(p + weight)
                if target is None:
                    continue
                t_start, t_stop = target
                block = np.zeros((t_stop - t_start, stop - start), dtype=np.uint8)
                for col, j in enumerate(range(start, stop)):
                    for row in iter_bits(table[j]):
                        block[row - t_start, col] = 1
                if block.any():
                    block.setflags(write=False)
                    blocks[(pos, p)] = block
        return blocks

    # ------------------------------------------------------------------
    # 结构信息

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def n_generators(self) -> int:
        return self.ring.variables.nvars

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientAlgebra):
            return NotImplemented
        return (self.spec == other.spec and self.ring == other.ring
                and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.spec, self.ring, self.basis))

    def __repr__(self) -> str:
        return f"QuotientAlgebra(W_{{{self.spec.n},{self.spec.k}}}, dim={self.dimension})"

    def degree_slice(self, degree: int) -> Tuple[int, int]:
        """次数为 degree 的基元素编号区间 [start, stop)"""
        return self._slices.get(degree, (0, 0))

    def slice_dimension(self, degree: int) -> int:
        start, stop = self.degree_slice(degree)
        return stop - start

    def block(self, pos: int, degree: int) -> Optional[np.ndarray]:
        """乘 w_{pos+2} 在次数 degree 上的矩阵块；全零时为 None"""
        return self._blocks.get((pos, degree))

    def basis_monomial(self, j: int) -> Monomial:
        return self.ring.to_monomial(self.basis[j])

    def basis_monomials(self) -> List[Monomial]:
        return [self.ring.to_monomial(key) for key in self.basis]

    def generator_matrix(self, i: int) -> np.ndarray:
        """乘 w̃_i 的完整 dim×dim 0/1 矩阵（列为输入基元素）"""
        table = self.gen_tables[self.ring.variables.position(i)]
        matrix = np.zeros((self.dimension, self.dimension), dtype=np.uint8)
        for col, image in enumerate(table):
            for row in iter_bits(image):
                matrix[row, col] = 1
        return matrix

    # ------------------------------------------------------------------
    # 位集层面的乘法

    def apply_generator(self, pos: int, coords: int) -> int:
        table = self.gen_tables[pos]
        result = 0
        while coords:
            low = coords & -coords
            result ^= table[low.bit_length() - 1]
            coords ^= low
        return result

    def apply_exponents(self, coords: int, exponents: Sequence[int]) -> int:
        for pos, e in enumerate(exponents):
            for _ in range(e):
                if not coords:
                    return 0
                coords = self.apply_generator(pos, coords)
        return coords

    def apply_basis(self, coords: int, j: int) -> int:
        """coords · b_j"""
        return self.apply_exponents(coords, self.ring.unpack(self.basis[j]))

    # ------------------------------------------------------------------
    # 元素

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, 1)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, 0)

    def basis_element(self, j: int) -> "AlgebraElement":
        return AlgebraElement(self, 1 << j)

    def generator(self, i: int) -> "AlgebraElement":
        """w̃_i"""
        return self.element(PolynomialF2.variable(self.ring, i))

    def monomial_element(self, exponents: Sequence[int]) -> "AlgebraElement":
        """w̃2^e2 ··· w̃k^ek"""
        return AlgebraElement(self, self.apply_exponents(1, exponents))

    def element(self, p: Union[PolynomialF2, str]) -> "AlgebraElement":
        """多项式（或其文本）的陪集"""
        if isinstance(p, str):
            p = parse(p, self.ring)
        return AlgebraElement(self, self._coords_of(normal_form(p, self.gb)))


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """W_{n,k} 中的元素（GF(2) 坐标位集）"""

    algebra: QuotientAlgebra
    coords: int

    def __post_init__(self):
        if self.coords < 0 or self.coords >> self.algebra.dimension:
            raise ValueError(f"坐标超出代数维数 {self.algebra.dimension}")

    def indices(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.coords))

    def is_zero(self) -> bool:
        return self.coords == 0

    def __bool__(self) -> bool:
        return self.coords != 0

    @property
    def degree(self) -> Union[int, str, None]:
        """公共次数；跨次数的和为 "mixed"；零元素为 None"""
        degrees = {self.algebra.degrees[j] for j in iter_bits(self.coords)}
        if not degrees:
            return None
        if len(degrees) > 1:
            return "mixed"
        return degrees.pop()

    def _check(self, other: "AlgebraElement"):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise AlgebraMismatchError("两个元素不属于同一个代数")

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.coords == other.coords and (
            self.algebra is other.algebra or self.algebra == other.algebra)

    def __hash__(self) -> int:
        return hash(self.coords)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.algebra, self.coords ^ other.coords)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)

    def __pow__(self, exponent: int) -> "AlgebraElement":
        result = self.algebra.one()
        for _ in range(exponent):
            result = result * self
            if not result:
                break
        return result

    def to_polynomial(self) -> PolynomialF2:
        """规范代表元（标准单项式之和）"""
        basis = self.algebra.basis
        return PolynomialF2(self.algebra.ring, (basis[j] for j in iter_bits(self.coords)))

    def __str__(self) -> str:
        return str(self.to_polynomial())

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """乘积：对支撑较小的一方逐个基单项式应用生成元乘法表"""
    a._check(b)
    A = a.algebra
    if bin(a.coords).count("1") > bin(b.coords).count("1"):
        a, b = b, a
    result = 0
    for j in iter_bits(a.coords):
        result ^= A.apply_basis(b.coords, j)
    return AlgebraElement(A, result)


_ALGEBRA_CACHE = LRUCache(maxsize=16, label="商代数")


def build_algebra(spec: IdealSpec, gb: Optional[GroebnerBasis] = None, n_workers: int = 1) -> QuotientAlgebra:
    """构造 W_{n,k}

    Args:
        spec: 理想参数
        gb: 指定 Gröbner 基；None 时用已知基或 Buchberger（结果在进程内缓存）
        n_workers: Buchberger 的并行度
    """
    if gb is None:
        return _ALGEBRA_CACHE.get_or_build(
            entry_key(spec.n, spec.ring), lambda: build_algebra(spec, obtain_basis(spec, n_workers=n_workers))
        )

    start = time.perf_counter()
    algebra = QuotientAlgebra(spec, gb)
    elapsed = (time.perf_counter() - start) * 1000
    logger.info(f"构造 W_{{{spec.n},{spec.k}}}：维数 {algebra.dimension}，"
                f"最高次数 {algebra.top_degree}，耗时 {elapsed:.2f}ms")
    return algebra


def dim_profile(A: QuotientAlgebra) -> List[Tuple[int, int]]:
    """[(次数, 维数)]，次数 0..最高次数"""
    return [(d, A.slice_dimension(d)) for d in range(A.top_degree + 1)]
