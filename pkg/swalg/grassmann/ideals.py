"""
理想 I_{n,k} = (g_{n-k+1}, ..., g_n) 及已知的 Gröbner 基族

已知基（k=3 用 w2 > w3，k=4 用 w4 > w2 > w3）：
    F          = {g_{2^t-3+2^i} : 0 <= i <= t-1}      （I_{2^t,3} = I_{2^t-1,3}）
    F_{2^t}    = F_{2^t+1} = F ∪ {g_{2^t}}
    F_{2^t-1}  = F ∪ {g_{2^t-4}}
    F_{2^t-2}  = F ∪ {g_{2^t-4}, g_{2^t-5}}
"""

from functools import lru_cache
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..f2poly import Monomial, MonomialOrder, PolynomialF2, PolyRing
from ..groebner import (
    GroebnerBasis,
    GroebnerError,
    buchberger,
    is_groebner,
    is_reduced_basis,
    reduce_groebner_basis,
)
from ..performance.cache import BasisCache
from swalg.logger_config import get_module_logger
from .gpoly import g_poly

logger = get_module_logger()


class NoKnownBasisError(LookupError):
    """(n, k) 不属于已知基族"""

    def __init__(self, n: int, k: int):
        super().__init__(f"I_{{{n},{k}}}: no known basis; use buchberger")
        self.n = n
        self.k = k


class KnownBasisMismatchError(GroebnerError):
    """已知基的验证失败（首项集合不符或不是 Gröbner 基）"""


class IdealSpec(BaseModel):
    """理想 I_{n,k} 的参数"""

    model_config = ConfigDict(frozen=True, extra='forbid')

    n: int = Field(..., description="环境维数 n")
    k: int = Field(..., description="平面维数 k（变量 w2..wk）")

    @model_validator(mode='after')
    def check_range(self) -> 'IdealSpec':
        if not 2 <= self.k <= 8:
            raise ValueError(f"k 必须满足 2 <= k <= 8，实际 k={self.k}")
        if self.n < 2 * self.k:
            raise ValueError(f"需要 n >= 2k，实际 n={self.n}, k={self.k}")
        return self

    @property
    def ring(self) -> PolyRing:
        return PolyRing.for_k(self.k)

    def __str__(self) -> str:
        return f"I_{{{self.n},{self.k}}}"


def ideal_generators(spec: IdealSpec, order: Optional[MonomialOrder] = None) -> List[PolynomialF2]:
    """g_{n-k+1}, ..., g_n（可能含零多项式）"""
    return [g_poly(spec.k, r, order) for r in range(spec.n - spec.k + 1, spec.n + 1)]


def _power_of_two(x: int) -> Optional[int]:
    if x > 0 and x & (x - 1) == 0:
        return x.bit_length() - 1
    return None


def known_family(n: int, k: int) -> Tuple[int, int]:
    """返回 (t, j)，其中 n = 2^t - j（j ∈ {-1, 0, 1, 2}）；不在已知族中时抛 NoKnownBasisError"""
    if k == 3:
        for j in (0, 1):
            t = _power_of_two(n + j)
            if t is not None and t >= 3:
                return t, j
    elif k == 4:
        for j in (-1, 0, 1, 2):
            t = _power_of_two(n + j)
            if t is None:
                continue
            if j <= 0 and t >= 3:
                return t, j
            if j > 0 and t >= 4:
                return t, j
    raise NoKnownBasisError(n, k)


def expected_leading_monomials(n: int, k: int) -> frozenset:
    """已知基的首项集合"""
    t, j = known_family(n, k)
    pad = (0,) if k == 4 else ()
    lms = {Monomial((2 ** (t - 1) - 2 ** i, 2 ** i - 1) + pad) for i in range(t)}
    if k == 4:
        q = 2 ** (t - 2)
        if j <= 0:
            lms.add(Monomial((0, 0, q)))
        else:
            lms.add(Monomial((0, 0, q - 1)))
            if j == 2:
                lms.add(Monomial((0, 1, q - 2)))
    return frozenset(lms)


@lru_cache(maxsize=64)
def known_gb(n: int, k: int, verify: bool = True) -> GroebnerBasis:
    """已知 Gröbner 基（由 g_poly 构造）

    Args:
        verify: 断言 is_groebner 成立且首项集合与已知列表一致

    Raises:
        NoKnownBasisError: (n, k) 不在已知基族中
        KnownBasisMismatchError: 验证失败
    """
    t, j = known_family(n, k)
    gens = [g_poly(k, 2 ** t - 3 + 2 ** i) for i in range(t)]
    if k == 4:
        if j <= 0:
            gens.append(g_poly(4, 2 ** t))
        else:
            gens.append(g_poly(4, 2 ** t - 4))
            if j == 2:
                gens.append(g_poly(4, 2 ** t - 5))

    basis = GroebnerBasis(tuple(gens), reduced=is_reduced_basis(gens))
    if verify:
        expected = expected_leading_monomials(n, k)
        if basis.lm_set() != expected:
            raise KnownBasisMismatchError(
                f"I_{{{n},{k}}} 首项集合不符: {sorted(map(str, basis.lm_set()))} != "
                f"{sorted(map(str, expected))}"
            )
        if not is_groebner(basis):
            raise KnownBasisMismatchError(f"I_{{{n},{k}}} 的已知基不是 Gröbner 基")
        logger.debug(f"已验证 I_{{{n},{k}}} 的已知基（t={t}，{len(gens)} 个生成元）")
    return basis


def reduced_basis(spec: IdealSpec, n_workers: int = 1) -> GroebnerBasis:
    """用 Buchberger 从生成元重新计算约化基（默认序）"""
    gens = [g for g in ideal_generators(spec) if g]
    return buchberger(gens, n_workers=n_workers)


def obtain_basis(spec: IdealSpec, n_workers: int = 1, cache: Optional[BasisCache] = None) -> GroebnerBasis:
    """I_{n,k} 的约化 Gröbner 基：可用时由已知基约化得到，否则回退到 Buchberger

    Args:
        cache: 给定时先查两级缓存，未命中则计算后写入
    """
    def compute() -> GroebnerBasis:
        try:
            return reduce_groebner_basis(known_gb(spec.n, spec.k))
        except NoKnownBasisError:
            logger.info(f"{spec} 没有已知基，使用 Buchberger 计算")
            return reduced_basis(spec, n_workers=n_workers)

    if cache is None:
        return compute()
    return cache.get_or_compute(spec.n, spec.ring, compute)
