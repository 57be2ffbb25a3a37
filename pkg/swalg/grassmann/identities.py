"""
多项式恒等式验证

每个恒等式注册为一个检查函数 check(t, rng) -> Optional[str]：
返回 None 表示该实例通过，否则返回反例描述。失败是数据而不是异常。

    a  g_r = Σ_j w_j^{2^s} g_{r-j·2^s}，r >= 1 + k(2^s - 1)
    b  g_{2^t-3} = 0（k = 3, 4）
    c  g^{(4)}_{2^t-3+2^i} = g^{(3)}_{2^t-3+2^i}
    d  g_{2^t-4} = Σ_{i=0}^{t-2} w4^{2^i-1} (g^{(3)}_{2^{t-i}-4})^{2^i}
    e  w3 g_r^2 = g_{2r+3}，r >= -3
    f  w4^{2^{t-1}-1} = g_{2^{t+1}-4} + w2^{2^{t-1}} g_{2^t-4} + w3^{2^{t-1}} g_{2^{t-1}-4}
    g  w4^{2^{t-1}-2} = α g_{2^t-2} + g_{2^t-4}^2 + β g_{2^t-5} + w3^{2^{t-1}-1} g_{2^{t-1}-5}
    h  w3^{2^{t-2}-1} w4^{2^{t-2}-2} = w3^{2^{t-2}-2} g_{2^t-5} + Σ_{i=2}^{t-2} w3^{2^{t-2}-2^i} w4^{2^{i-1}-2} g_{2^t-3+2^i}
    i  I_{2^t,3} = I_{2^t,4} ∩ F2[w2,w3]
    j  Σ p_j w4^j ∈ I_{2^t,4}（或 I_{2^t-1,4}）⟺ 所有 p_j ∈ I_{2^t,3}

未写上标的 g 均为 k = 4。
"""

import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

from ..f2poly import PolynomialF2, PolyRing
from ..groebner import contains, normal_form
from ..performance.parallel import run_parallel
from swalg.logger_config import get_module_logger
from .gpoly import g_poly
from .ideals import known_gb

logger = get_module_logger()

R3 = PolyRing.for_k(3)
R4 = PolyRing.for_k(4)

DEFAULT_T_RANGE = (3, 10)


# ============================================================================
# 报告模型
# ============================================================================

class InstanceResult(BaseModel):
    """单个实例 (id, t) 的结果"""

    t: int
    passed: bool
    elapsed_ms: float = Field(0.0, description="耗时（毫秒）")
    counterexample: Optional[str] = Field(None, description="第一个反例")

    @model_validator(mode='after')
    def failure_has_counterexample(self) -> 'InstanceResult':
        if not self.passed and not self.counterexample:
            raise ValueError("失败的实例必须给出反例")
        return self


class IdentityReport(BaseModel):
    """一个恒等式在一段 t 范围上的验证结果"""

    identity_id: str
    description: str
    t_range: Tuple[int, int]
    results: List[InstanceResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def first_counterexample(self) -> Optional[str]:
        for r in self.results:
            if not r.passed:
                return f"t={r.t}: {r.counterexample}"
        return None


# ============================================================================
# 注册表
# ============================================================================

Check = Callable[[int, np.random.Generator], Optional[str]]


@dataclass(frozen=True)
class IdentityCheck:
    identity_id: str
    description: str
    t_min: int
    func: Check
    # 未指定范围时的起点
    default_t_min: int = DEFAULT_T_RANGE[0]


IDENTITY_REGISTRY: Dict[str, IdentityCheck] = {}


def register_identity(identity_id: str, description: str, t_min: int = 3, default_t_min: Optional[int] = None):
    """恒等式注册装饰器

    Args:
        t_min: 恒等式成立的最小 t，显式范围会被截到这里
        default_t_min: 未给出下界时的起点，缺省为 max(3, t_min)
    """

    def decorator(func: Check) -> Check:
        if identity_id in IDENTITY_REGISTRY:
            logger.warning(f"恒等式 '{identity_id}' 已存在，将被覆盖")
        IDENTITY_REGISTRY[identity_id] = IdentityCheck(
            identity_id, description, t_min, func,
            default_t_min if default_t_min is not None else max(DEFAULT_T_RANGE[0], t_min),
        )
        return func

    return decorator


def get_identity(identity_id: str) -> IdentityCheck:
    if identity_id not in IDENTITY_REGISTRY:
        available = ', '.join(sorted(IDENTITY_REGISTRY))
        raise KeyError(f"未找到恒等式 '{identity_id}'。可用恒等式：{available}")
    return IDENTITY_REGISTRY[identity_id]


# ============================================================================
# 工具
# ============================================================================

def g(r: int) -> PolynomialF2:
    return g_poly(4, r)


def g3(r: int) -> PolynomialF2:
    """g^{(3)}_r 嵌入到 F2[w2,w3,w4]"""
    return g_poly(3, r).embed(R4)


def mono(ring: PolyRing, *exps: int) -> PolynomialF2:
    return PolynomialF2.from_exponents(ring, exps)


def random_polynomial(ring: PolyRing, rng: np.random.Generator, n_terms: int = 3,
                      max_exp: int = 3, free_of: Sequence[int] = ()) -> PolynomialF2:
    """随机多项式（free_of 中的变量指数为 0）"""
    keys = []
    for _ in range(n_terms):
        exps = [int(e) for e in rng.integers(0, max_exp + 1, size=ring.variables.nvars)]
        for index in free_of:
            exps[index - 2] = 0
        keys.append(ring.pack(exps))
    return PolynomialF2(ring, keys)


def _mismatch(lhs: PolynomialF2, rhs: PolynomialF2) -> str:
    diff = lhs + rhs
    return f"两边相差 {len(diff)} 项，例如 {diff.ring.to_monomial(diff.terms[0])}"


# ============================================================================
# 恒等式
# ============================================================================

@register_identity('a', "g_r = Σ w_j^{2^s} g_{r-j2^s}, r >= 1+k(2^s-1)", t_min=1)
def check_generalized_recurrence(t: int, rng: np.random.Generator) -> Optional[str]:
    for k in (3, 4):
        ring = PolyRing.for_k(k)
        for _ in range(4):
            s = int(rng.integers(0, t))
            lo = 1 + k * (2 ** s - 1)
            r = int(rng.integers(lo, lo + 2 ** (t + 1)))
            lhs = g_poly(k, r)
            rhs = PolynomialF2.zero(ring)
            for j in range(2, k + 1):
                rhs = rhs + g_poly(k, r - j * 2 ** s).shift(ring.variable_key(j) << s)
            if lhs != rhs:
                return f"k={k}, r={r}, s={s}: " + _mismatch(lhs, rhs)
    return None


@register_identity('b', "g_{2^t-3} = 0 for k = 3, 4", t_min=2)
def check_vanishing(t: int, rng: np.random.Generator) -> Optional[str]:
    for k in (3, 4):
        p = g_poly(k, 2 ** t - 3)
        if p:
            return f"k={k}: g_{2 ** t - 3} 有 {len(p)} 项"
    return None


@register_identity('c', "g^(4)_{2^t-3+2^i} = g^(3)_{2^t-3+2^i}", t_min=1)
def check_w4_free(t: int, rng: np.random.Generator) -> Optional[str]:
    for i in range(t):
        r = 2 ** t - 3 + 2 ** i
        if g(r) != g3(r):
            return f"i={i}, r={r}: " + _mismatch(g(r), g3(r))
    return None


@register_identity('d', "g_{2^t-4} = Σ w4^{2^i-1} (g^(3)_{2^{t-i}-4})^{2^i}", t_min=2, default_t_min=2)
def check_g_minus_four(t: int, rng: np.random.Generator) -> Optional[str]:
    lhs = g(2 ** t - 4)
    rhs = PolynomialF2.zero(R4)
    for i in range(t - 1):
        rhs = rhs + g3(2 ** (t - i) - 4).frobenius(i).shift(R4.pack((0, 0, 2 ** i - 1)))
    return None if lhs == rhs else _mismatch(lhs, rhs)


@register_identity('e', "w3 g_r^2 = g_{2r+3}, r >= -3", t_min=1)
def check_w3_square(t: int, rng: np.random.Generator) -> Optional[str]:
    # 相邻 t 的区间首尾相接：t 覆盖 [2^{t-1}-3, 2^t-4]，最小的 t 从 -3 开始
    lo = -3 if t <= 3 else 2 ** (t - 1) - 3
    w3 = R4.variable_key(3)
    for r in range(lo, 2 ** t - 3):
        lhs = g(r).square().shift(w3)
        rhs = g(2 * r + 3)
        if lhs != rhs:
            return f"r={r}: " + _mismatch(lhs, rhs)
    return None


@register_identity('f', "w4^{2^{t-1}-1} = g_{2^{t+1}-4} + w2^{2^{t-1}} g_{2^t-4} + w3^{2^{t-1}} g_{2^{t-1}-4}")
def check_w4_power_top(t: int, rng: np.random.Generator) -> Optional[str]:
    h = 2 ** (t - 1)
    lhs = mono(R4, 0, 0, h - 1)
    rhs = (g(2 ** (t + 1) - 4)
           + g(2 ** t - 4).shift(R4.pack((h, 0, 0)))
           + g(h - 4).shift(R4.pack((0, h, 0))))
    return None if lhs == rhs else _mismatch(lhs, rhs)


@register_identity('g', "w4^{2^{t-1}-2} = α g_{2^t-2} + g_{2^t-4}^2 + β g_{2^t-5} + w3^{2^{t-1}-1} g_{2^{t-1}-5}", t_min=4)
def check_w4_power_second(t: int, rng: np.random.Generator) -> Optional[str]:
    h = 2 ** (t - 1)
    alpha = g(h - 4).square().shift(R4.variable_key(2))
    numerator = mono(R4, h, 0, 0) + g3(2 ** t)
    try:
        beta = numerator.divide_by_monomial(R4.variable_key(3))
    except ValueError as e:
        return f"w2^{h} + g^(3)_{2 ** t} 不能被 w3 整除: {e}"
    lhs = mono(R4, 0, 0, h - 2)
    rhs = (alpha * g(2 ** t - 2)
           + g(2 ** t - 4).square()
           + beta * g(2 ** t - 5)
           + g(h - 5).shift(R4.pack((0, h - 1, 0))))
    return None if lhs == rhs else _mismatch(lhs, rhs)


@register_identity('h', "w3^{q-1} w4^{q-2} = w3^{q-2} g_{2^t-5} + Σ w3^{q-2^i} w4^{2^{i-1}-2} g_{2^t-3+2^i}, q = 2^{t-2}")
def check_w3_w4_relation(t: int, rng: np.random.Generator) -> Optional[str]:
    q = 2 ** (t - 2)
    lhs = mono(R4, 0, q - 1, q - 2)
    rhs = g(2 ** t - 5).shift(R4.pack((0, q - 2, 0)))
    for i in range(2, t - 1):
        rhs = rhs + g(2 ** t - 3 + 2 ** i).shift(R4.pack((0, q - 2 ** i, 2 ** (i - 1) - 2)))
    return None if lhs == rhs else _mismatch(lhs, rhs)


@register_identity('i', "I_{2^t,3} = I_{2^t,4} ∩ F2[w2,w3]")
def check_intersection(t: int, rng: np.random.Generator) -> Optional[str]:
    n = 2 ** t
    F4 = known_gb(n, 4)
    F3 = known_gb(n, 3)
    for r in range(n - 2, n + 1):
        if not contains(F4, g_poly(3, r)):
            return f"g^(3)_{r} 不属于 I_{{{n},4}}"

    for sample in range(3):
        # Σ q_i g_i 模 w4 落在 I_{2^t,3} 中
        comb = PolynomialF2.zero(R4)
        for r in range(n - 2, n + 1):
            comb = comb + random_polynomial(R4, rng) * g(r)
        reduced = comb.substitute_zero(4)
        if not contains(F3, reduced):
            return f"样本 {sample}: 组合模 w4 后不属于 I_{{{n},3}}"

        # 不含 w4 的成员 p + nf(p)
        p = random_polynomial(R4, rng, n_terms=4, max_exp=2 ** (t - 1), free_of=(4,))
        member = p + normal_form(p, F4)
        if member.involves(4):
            return f"样本 {sample}: 成员 {member} 含有 w4"
        if not contains(F3, member):
            return f"样本 {sample}: 不含 w4 的成员不属于 I_{{{n},3}}"
    return None


def _check_w4_expansion(t: int, n: int, j_max: int, rng: np.random.Generator) -> Optional[str]:
    F4 = known_gb(n, 4)
    F = known_gb(2 ** t, 3)
    w4 = R4.variable_key(4)
    for sample in range(6):
        mode = ('members', 'random', 'mixed')[sample % 3]
        js = sorted(set(int(j) for j in rng.integers(0, j_max + 1, size=3)))
        parts: Dict[int, PolynomialF2] = {}
        for idx, j in enumerate(js):
            if mode == 'members' or (mode == 'mixed' and idx > 0):
                f = F.generators[int(rng.integers(0, len(F)))]
                parts[j] = random_polynomial(R3, rng, n_terms=2) * f
            else:
                parts[j] = random_polynomial(R3, rng, n_terms=3, max_exp=2 ** (t - 1))
        total = PolynomialF2.zero(R4)
        for j, p in parts.items():
            total = total + p.embed(R4).shift(w4 * j)
        left = contains(F4, total)
        right = all(contains(F, p) for p in parts.values())
        if left != right:
            return (f"n={n}, 样本 {sample} ({mode}): Σ p_j w4^j ∈ I 为 {left}，"
                    f"所有 p_j ∈ I_{{{2 ** t},3}} 为 {right}")
    return None


@register_identity('j', "Σ p_j w4^j ∈ I_{2^t,4} / I_{2^t-1,4} ⟺ p_j ∈ I_{2^t,3}")
def check_w4_expansion(t: int, rng: np.random.Generator) -> Optional[str]:
    q = 2 ** (t - 2)
    result = _check_w4_expansion(t, 2 ** t, q - 1, rng)
    if result is None and t >= 4:
        result = _check_w4_expansion(t, 2 ** t - 1, q - 2, rng)
    return result


# ============================================================================
# 验证入口
# ============================================================================

def _instance_seed(seed: int, identity_id: str, t: int) -> List[int]:
    return [seed, *map(ord, identity_id), t]


def _run_instance(identity_id: str, t: int, seed: int) -> InstanceResult:
    """工作进程入口：运行一个 (id, t) 实例"""
    check = get_identity(identity_id)
    rng = np.random.default_rng(_instance_seed(seed, identity_id, t))
    start = time.perf_counter()
    counterexample = check.func(t, rng)
    elapsed = (time.perf_counter() - start) * 1000
    return InstanceResult(t=t, passed=counterexample is None, elapsed_ms=elapsed,
                          counterexample=counterexample)


TRange = Tuple[Optional[int], Optional[int]]


def _effective_range(check: IdentityCheck, t_range: Optional[TRange]) -> Tuple[int, int]:
    lo, hi = t_range or (None, None)
    lo = check.default_t_min if lo is None else max(lo, check.t_min)
    return lo, DEFAULT_T_RANGE[1] if hi is None else hi


def verify_identities(
    identity_ids: Sequence[str],
    t_range: Optional[TRange] = None,
    seed: int = 0,
    n_workers: int = 1,
) -> List[IdentityReport]:
    """验证多个恒等式，所有 (id, t) 实例一起并行"""
    checks = [get_identity(i) for i in identity_ids]
    tasks = []
    for check in checks:
        lo, hi = _effective_range(check, t_range)
        tasks.extend((check.identity_id, t, seed) for t in range(lo, hi + 1))

    start = time.perf_counter()
    results = run_parallel(_run_instance, tasks, n_workers=n_workers, label="恒等式实例")

    reports = []
    for check in checks:
        lo, hi = _effective_range(check, t_range)
        own = [res for (cid, _, _), res in zip(tasks, results) if cid == check.identity_id]
        report = IdentityReport(identity_id=check.identity_id, description=check.description,
                                t_range=(lo, hi), results=own)
        if not report.passed:
            logger.warning(f"恒等式 ({check.identity_id}) 失败: {report.first_counterexample}")
        reports.append(report)

    elapsed = (time.perf_counter() - start) * 1000
    logger.info(f"验证 {len(checks)} 个恒等式、{len(tasks)} 个实例，耗时 {elapsed:.2f}ms")
    return reports


def verify_identity(
    identity_id: str,
    t_range: Optional[TRange] = None,
    seed: int = 0,
    n_workers: int = 1,
) -> IdentityReport:
    """验证单个恒等式"""
    return verify_identities([identity_id], t_range, seed=seed, n_workers=n_workers)[0]
