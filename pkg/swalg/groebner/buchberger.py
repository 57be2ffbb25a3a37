"""
Buchberger 算法（约化 Gröbner 基）

- 选对策略：normal strategy（lcm 最小的对优先）
- Buchberger 乘积判据（首项互素）与链判据
- 并行时一次取一批对，S 多项式在工作进程中约化，插入步骤串行
- 结果做极小化 + 相互约化，并按首项升序排列（约化基唯一）
"""

import time
from typing import List, Optional, Sequence, Set, Tuple

from ..f2poly import MonomialOrder, PolynomialF2, ZeroPolynomialError
from swalg.logger_config import get_module_logger
from ..performance.parallel import run_parallel
from .basis import GroebnerBasis, reduce_by, s_polynomial

logger = get_module_logger()


class _PairQueue:
    """待处理的生成元对 (i, j)，i < j"""

    def __init__(self):
        self.pending: Set[Tuple[int, int]] = set()

    def __bool__(self) -> bool:
        return bool(self.pending)

    def __len__(self) -> int:
        return len(self.pending)

    def add_all(self, new_index: int):
        for i in range(new_index):
            self.pending.add((i, new_index))

    def pop_min(self, lcms) -> Tuple[int, int]:
        pair = min(self.pending, key=lambda p: (lcms[p], p[1], p[0]))
        self.pending.discard(pair)
        return pair

    def __contains__(self, pair: Tuple[int, int]) -> bool:
        i, j = pair
        return (min(i, j), max(i, j)) in self.pending


def _reduce_s_pair(f: PolynomialF2, g: PolynomialF2, basis: Tuple[PolynomialF2, ...]) -> PolynomialF2:
    """工作进程入口：S(f, g) 对当前基快照的完全约化"""
    return reduce_by(s_polynomial(f, g), basis)


def buchberger(
    G0: Sequence[PolynomialF2],
    order: Optional[MonomialOrder] = None,
    n_workers: int = 1,
) -> GroebnerBasis:
    """计算 <G0> 的约化 Gröbner 基

    Args:
        G0: 非零多项式（同一个环）
        order: 单项式序；None 时沿用输入多项式所在环的序
        n_workers: > 1 时批量并行约化 S 多项式

    Returns:
        reduced=True 的 GroebnerBasis
    """
    polys = list(G0)
    if not polys:
        raise ValueError("buchberger 至少需要一个输入多项式")
    if any(p.is_zero() for p in polys):
        raise ZeroPolynomialError("buchberger 的输入多项式不能为零")
    if order is not None:
        polys = [p.with_order(order) for p in polys]
    ring = polys[0].ring

    start = time.perf_counter()
    G: List[PolynomialF2] = []
    queue = _PairQueue()
    lcms = {}

    def insert(h: PolynomialF2):
        G.append(h)
        j = len(G) - 1
        for i in range(j):
            lcms[(i, j)] = ring.lcm(G[i].leading_key, h.leading_key)
        queue.add_all(j)

    for p in polys:
        h = reduce_by(p, G)
        if h:
            insert(h)

    def skip(pair: Tuple[int, int]) -> bool:
        i, j = pair
        a, b = G[i].leading_key, G[j].leading_key
        if ring.coprime(a, b):
            return True
        lcm = lcms[pair]
        for k in range(len(G)):
            if k in (i, j):
                continue
            if ring.divides(G[k].leading_key, lcm) and (i, k) not in queue and (j, k) not in queue:
                return True
        return False

    reductions = 0
    while queue:
        batch: List[Tuple[int, int]] = []
        while queue and len(batch) < max(n_workers, 1):
            pair = queue.pop_min(lcms)
            if not skip(pair):
                batch.append(pair)
        if not batch:
            continue

        snapshot = tuple(G)
        tasks = [(G[i], G[j], snapshot) for i, j in batch]
        results = run_parallel(_reduce_s_pair, tasks, n_workers=n_workers, label="S 多项式")
        reductions += len(batch)
        for h in results:
            if len(G) > len(snapshot):
                h = reduce_by(h, G)
            if h:
                insert(h)
                logger.debug(f"新增生成元 #{len(G) - 1}，首项 {h.lm()}，{len(h)} 项")

    basis = _reduce_basis(G)
    elapsed = (time.perf_counter() - start) * 1000
    logger.info(
        f"Buchberger 完成：{len(polys)} 个输入 -> {len(basis)} 个生成元，"
        f"约化 {reductions} 个 S 多项式，耗时 {elapsed:.2f}ms"
    )
    return basis


def _reduce_basis(G: Sequence[PolynomialF2]) -> GroebnerBasis:
    """极小化 + 相互约化 + 按首项升序"""
    ring = G[0].ring
    minimal: List[PolynomialF2] = []
    for g in sorted(G, key=lambda p: p.leading_key):
        if not any(ring.divides(h.leading_key, g.leading_key) for h in minimal):
            minimal.append(g)

    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(reduce_by(g, others))
    reduced.sort(key=lambda p: p.leading_key)
    return GroebnerBasis(tuple(reduced), reduced=True)


def reduce_groebner_basis(F: GroebnerBasis) -> GroebnerBasis:
    """把任意 Gröbner 基化为（唯一的）约化 Gröbner 基"""
    return _reduce_basis(F.generators)
