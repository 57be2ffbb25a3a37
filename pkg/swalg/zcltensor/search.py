"""
零因子杯长的精确搜索与非零性证书

P(a) = Π z(w̃_i)^{a_i} 的非零集合在分量序下是下闭的。按字典序扫描前缀
(a_1..a_{s-1})，末位指数一直乘到为零；末位上界取"某一前缀分量减一"时
末位最大值的最小者。
"""

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..f2poly import Monomial, parse
from ..performance.parallel import run_parallel
from ..quotient import QuotientAlgebra, cup_length_W, height
from .kernel import SlicedTensor
from swalg.logger_config import get_module_logger

logger = get_module_logger()

Prefix = Tuple[int, ...]


class ZclBudgetExceeded(RuntimeError):
    """搜索超出步数或内存预算

    Attributes:
        lower_bound: 已验证的下界 max(cl(W), 已找到的最大总指数)
        frontier: 截至中断时的极大非零指数组（不完整）
    """

    def __init__(self, message: str, lower_bound: int, frontier: Sequence[Tuple[int, ...]] = ()):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.frontier = list(frontier)


class _BudgetHit(Exception):
    pass


@dataclass(frozen=True)
class ZclCertificate:
    """zcl(W) 的证书：取到最大值的指数组、一个存活项与全部极大指数组"""

    n: int
    k: int
    zcl: int
    exponents: Tuple[int, ...]
    sample_term: Tuple[str, str]
    frontier: Tuple[Tuple[int, ...], ...] = field(default=())
    steps: int = 0

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'k': self.k,
            'zcl': self.zcl,
            'exponents': list(self.exponents),
            'frontier': [list(e) for e in self.frontier],
            'witness_term': list(self.sample_term),
        }

    def verify(self, A: QuotientAlgebra) -> bool:
        """重新展开乘积，确认存活项确实出现"""
        if (A.spec.n, A.spec.k) != (self.n, self.k) or sum(self.exponents) != self.zcl:
            return False
        kernel = _expand(A, self.exponents)
        ring = A.ring
        try:
            left, right = (A.index[ring.pack(_parse_monomial(A, s))] for s in self.sample_term)
        except KeyError:
            return False
        return kernel.contains(left, right)


def _parse_monomial(A: QuotientAlgebra, text: str) -> Tuple[int, ...]:
    p = parse(text, A.ring)
    if len(p) != 1:
        raise KeyError(text)
    return A.ring.unpack(p.terms[0])


def _expand(A: QuotientAlgebra, exponents: Sequence[int]) -> SlicedTensor:
    kernel = SlicedTensor.unit(A)
    for pos, e in enumerate(exponents):
        for _ in range(e):
            kernel = kernel.times_z(pos)
            if not kernel:
                return kernel
    return kernel


def witness_nonzero(A: QuotientAlgebra, exponents: Sequence[int]) -> Tuple[bool, Optional[Tuple[Monomial, Monomial]]]:
    """P = Π z(w̃_i)^{a_i} 是否非零；非零时给出一个存活项 (u, v)

    Args:
        exponents: (a_2, ..., a_k)，长度等于生成元个数
    """
    if len(exponents) != A.n_generators:
        raise ValueError(f"需要 {A.n_generators} 个指数，得到 {len(exponents)}")
    if any(e < 0 for e in exponents):
        raise ValueError(f"指数不能为负: {tuple(exponents)}")
    kernel = _expand(A, exponents)
    term = kernel.sample_term()
    if term is None:
        return False, None
    return True, (A.basis_monomial(term[0]), A.basis_monomial(term[1]))


class _Scanner:
    """在指数格上扫描 P 的非零区域，记录每个前缀的末位最大指数"""

    def __init__(self, A: QuotientAlgebra, caps: Sequence[int], max_steps: int, max_bytes: int):
        self.A = A
        self.caps = list(caps)
        self.last = len(caps) - 1
        self.max_steps = max_steps
        self.max_bytes = max_bytes
        self.last_max: Dict[Prefix, int] = {}
        self.steps = 0

    def _times_z(self, kernel: SlicedTensor, pos: int) -> SlicedTensor:
        self.steps += 1
        out = kernel.times_z(pos)
        if self.steps > self.max_steps or out.nbytes * len(self.caps) > self.max_bytes:
            raise _BudgetHit
        return out

    def _last_bound(self, prefix: Prefix) -> int:
        bound = self.caps[self.last]
        for j, e in enumerate(prefix):
            if e:
                lower = self.last_max.get(prefix[:j] + (e - 1,) + prefix[j + 1:])
                if lower is not None:
                    bound = min(bound, lower)
        return bound

    def descend(self, pos: int, kernel: SlicedTensor, prefix: Prefix):
        if pos == self.last:
            bound = self._last_bound(prefix)
            e = 0
            while e < bound:
                nxt = self._times_z(kernel, pos)
                if not nxt:
                    break
                kernel = nxt
                e += 1
            self.last_max[prefix] = e
            return
        for e in range(self.caps[pos] + 1):
            if e:
                kernel = self._times_z(kernel, pos)
                if not kernel:
                    break
            self.descend(pos + 1, kernel, prefix + (e,))

    def scan(self, first: Optional[int] = None) -> bool:
        """完整扫描，或只扫描首指数固定为 first 的部分；返回是否完成"""
        try:
            if first is None:
                self.descend(0, SlicedTensor.unit(self.A), ())
            else:
                kernel = SlicedTensor.unit(self.A)
                for _ in range(first):
                    kernel = self._times_z(kernel, 0)
                    if not kernel:
                        return True
                self.descend(1, kernel, (first,))
        except _BudgetHit:
            return False
        return True


def _scan_first_exponent(A: QuotientAlgebra, first: int, caps: Sequence[int],
                         max_steps: int, max_bytes: int) -> Tuple[Dict[Prefix, int], int, bool]:
    """并行任务：扫描首指数固定的切片"""
    scanner = _Scanner(A, caps, max_steps, max_bytes)
    done = scanner.scan(first)
    return scanner.last_max, scanner.steps, done


def _summarize(last_max: Dict[Prefix, int]) -> Tuple[int, Tuple[int, ...], List[Tuple[int, ...]]]:
    best, best_exps = -1, ()
    frontier = []
    for prefix in sorted(last_max):
        e = last_max[prefix]
        if sum(prefix) + e > best:
            best, best_exps = sum(prefix) + e, prefix + (e,)
        maximal = all(
            last_max.get(prefix[:j] + (prefix[j] + 1,) + prefix[j + 1:], -1) < e
            for j in range(len(prefix))
        )
        if maximal:
            frontier.append(prefix + (e,))
    return best, best_exps, frontier


def zcl_exact(A: QuotientAlgebra, max_steps: int = 5_000_000, memory_budget_mb: int = 2048,
              n_workers: int = 1) -> Tuple[int, ZclCertificate]:
    """精确零因子杯长

    zcl(W) = max Σa_i，其中 Π z(w̃_i)^{a_i} ≠ 0（乘法映射的核由 z(w̃_i) 生成）。

    Args:
        max_steps: 张量乘法步数上限（并行时为每个任务的上限）
        memory_budget_mb: 单个中间张量乘以递归深度的内存上限
        n_workers: > 1 时按首指数拆分到进程池

    Raises:
        ZclBudgetExceeded: 超出预算，附带已验证的下界
    """
    start = time.perf_counter()
    caps = [2 * height(A, i) + 1 for i in range(2, A.k + 1)]
    max_bytes = memory_budget_mb * 1024 * 1024

    if n_workers > 1 and len(caps) > 1:
        tasks = [(A, first, caps, max_steps, max_bytes) for first in range(caps[0] + 1)]
        results = run_parallel(_scan_first_exponent, tasks, n_workers=n_workers, label="zcl 切片")
        last_max: Dict[Prefix, int] = {}
        steps, done = 0, True
        for part, part_steps, part_done in results:
            last_max.update(part)
            steps += part_steps
            done = done and part_done
    else:
        scanner = _Scanner(A, caps, max_steps, max_bytes)
        done = scanner.scan()
        last_max, steps = scanner.last_max, scanner.steps

    best, best_exps, frontier = _summarize(last_max)
    if not done:
        cl, _ = cup_length_W(A)
        lower = max(cl, best)
        logger.warning(f"zcl(W_{{{A.spec.n},{A.spec.k}}}) 搜索超出预算（{steps} 步），已证下界 {lower}")
        raise ZclBudgetExceeded(
            f"zcl(W_{{{A.spec.n},{A.spec.k}}}) 超出预算（max_steps={max_steps}, "
            f"memory_budget_mb={memory_budget_mb}），已证下界 {lower}",
            lower_bound=lower,
            frontier=frontier,
        )

    nonzero, term = witness_nonzero(A, best_exps)
    assert nonzero and term is not None
    certificate = ZclCertificate(
        n=A.spec.n,
        k=A.spec.k,
        zcl=best,
        exponents=best_exps,
        sample_term=(str(term[0]), str(term[1])),
        frontier=tuple(frontier),
        steps=steps,
    )
    elapsed = (time.perf_counter() - start) * 1000
    logger.info(f"zcl(W_{{{A.spec.n},{A.spec.k}}}) = {best}，指数 {best_exps}，"
                f"{len(frontier)} 个极大指数组，{steps} 步，耗时 {elapsed:.2f}ms")
    return best, certificate
