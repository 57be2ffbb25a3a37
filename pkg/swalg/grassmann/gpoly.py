"""
g 多项式

(1 + w2 + ... + wk)(g0 + g1 + g2 + ...) = 1 的逆幂级数系数。

主路径为带记忆的递推 g_r = Σ_{j=2..k} w_j g_{r-j}（g0 = 1，-k+1 <= r < 0 时为 0），
展开式 g_poly_closed 与递推不共享代码，作为独立对照。
"""

import threading
from typing import Dict, List, Optional

from ..f2poly import MonomialOrder, PolynomialF2, PolyRing, binom_parity
from swalg.logger_config import get_module_logger

logger = get_module_logger()


class GPolynomialTable:
    """单个环上 g_r 的记忆表（单写者，线程安全）"""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self._values: List[PolynomialF2] = [PolynomialF2.one(ring)]
        self._var_keys = [ring.variable_key(j) for j in range(2, ring.k + 1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def get(self, r: int) -> PolynomialF2:
        k = self.ring.k
        if r < -k + 1:
            raise ValueError(f"g_r^({k}) 仅对 r >= {-k + 1} 定义，实际 r={r}")
        if r < 0:
            return PolynomialF2.zero(self.ring)
        if r < len(self._values):
            return self._values[r]
        with self._lock:
            self._extend(r)
        return self._values[r]

    def _extend(self, r: int):
        values = self._values
        start = len(values)
        for s in range(start, r + 1):
            keys = []
            for j, var_key in enumerate(self._var_keys, start=2):
                if s - j >= 0:
                    keys.extend(t + var_key for t in values[s - j].terms)
            values.append(PolynomialF2(self.ring, keys))
        if r + 1 - start > 256:
            logger.debug(f"g 多项式表扩展到 r={r}（k={self.ring.k}）")


_TABLES: Dict[PolyRing, GPolynomialTable] = {}
_TABLES_LOCK = threading.Lock()


def _table(ring: PolyRing) -> GPolynomialTable:
    table = _TABLES.get(ring)
    if table is None:
        with _TABLES_LOCK:
            table = _TABLES.setdefault(ring, GPolynomialTable(ring))
    return table


def g_poly(k: int, r: int, order: Optional[MonomialOrder] = None) -> PolynomialF2:
    """g_r^{(k)}（递推 + 记忆）"""
    return _table(PolyRing.for_k(k, order)).get(r)


def g_poly_closed(k: int, r: int, order: Optional[MonomialOrder] = None) -> PolynomialF2:
    """g_r^{(k)} 的直接展开

    对满足 Σ i·a_i = r 的 (a_2, ..., a_k)，保留
    C(a_2+...+a_k, a_2)·C(a_3+...+a_k, a_3)···C(a_{k-1}+a_k, a_{k-1}) 为奇数的项。
    """
    if r < 0:
        raise ValueError(f"g_poly_closed 需要 r >= 0，实际 r={r}")
    ring = PolyRing.for_k(k, order)
    keys = []
    for exps in ring.monomials_of_degree(r):
        remaining = sum(exps)
        odd = 1
        for a in exps[:-1]:
            odd &= binom_parity(remaining, a)
            if not odd:
                break
            remaining -= a
        if odd:
            keys.append(ring.pack(exps))
    return PolynomialF2(ring, keys)
