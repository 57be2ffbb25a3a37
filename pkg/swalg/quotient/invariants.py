"""
高度与杯长
"""

from typing import Dict, List, Optional, Tuple

from ..f2poly import Monomial
from .algebra import QuotientAlgebra
from swalg.logger_config import get_module_logger

logger = get_module_logger()


def height(A: QuotientAlgebra, i: int) -> int:
    """ht(w̃_i) = max{m : w̃_i^m ≠ 0}"""
    pos = A.ring.variables.position(i)
    x = A.generator(i).coords
    if not x:
        return 0
    m = 1
    while True:
        y = A.apply_generator(pos, x)
        if not y:
            break
        x = y
        m += 1
    assert x and not A.apply_generator(pos, x)
    return m


def heights(A: QuotientAlgebra) -> Dict[str, int]:
    """{"w2": ht(w̃2), ...}"""
    return {
        name: height(A, idx)
        for idx, name in zip(range(2, A.k + 1), A.ring.variables.names)
    }


def cup_length_W(A: QuotientAlgebra) -> Tuple[int, Monomial]:
    """W 的杯长及一个取到最大值的单项式

    在指数盒 Π[0, ht(w̃_i)] 中按字典序递归搜索，某个前缀的陪集为零时剪枝
    （分量更大的单项式也为零）。只有严格更大时才更新，因此见证单项式是
    字典序最小的极大者。
    """
    caps = [height(A, i) for i in range(2, A.k + 1)]
    last = len(caps) - 1
    best = [-1]
    witness: List[Optional[Tuple[int, ...]]] = [None]

    def _search(pos: int, coords: int, prefix: Tuple[int, ...], total: int):
        if pos == last:
            e = 0
            while e < caps[pos]:
                nxt = A.apply_generator(pos, coords)
                if not nxt:
                    break
                coords = nxt
                e += 1
            if total + e > best[0]:
                best[0] = total + e
                witness[0] = prefix + (e,)
            return
        for e in range(caps[pos] + 1):
            if e:
                coords = A.apply_generator(pos, coords)
                if not coords:
                    break
            _search(pos + 1, coords, prefix + (e,), total + e)

    _search(0, 1, (), 0)
    result = Monomial(witness[0])
    logger.debug(f"cl(W_{{{A.spec.n},{A.spec.k}}}) = {best[0]}，见证 {result}")
    return best[0], result


def low_degree_vanishing(A: QuotientAlgebra, t: int) -> Dict[str, bool]:
    """W_{2^t-2,4} 中三个单项式为零的关系（t >= 4）

    (a) w̃2^{2^{t-2}} w̃3^{2^{t-2}-1}
    (b) w̃3^{2^{t-2}-1} w̃4^{2^{t-2}-2}
    (c) w̃2^{2^{t-1}+2^{t-2}} w̃4^{2^{t-2}-2}
    """
    if A.k != 4 or A.spec.n != 2 ** t - 2 or t < 4:
        raise ValueError(f"需要 W_{{2^t-2,4}}（t >= 4），得到 {A.spec} 与 t={t}")
    q = 2 ** (t - 2)
    monomials = {
        'a': (q, q - 1, 0),
        'b': (0, q - 1, q - 2),
        'c': (2 * q + q, 0, q - 2),
    }
    return {label: not A.monomial_element(exps) for label, exps in monomials.items()}
