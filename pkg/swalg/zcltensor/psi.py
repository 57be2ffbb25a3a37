"""
ψ: W_{2^t-1,3} -> W_{2^t-2,4}，ψ(w̃2) = w̃2，ψ(w̃3) = w̃3

psi_check 验证 ψ 良定义以及标准单项式 σ·w4^d 的像仍是标准单项式；
psi_sum_nonvanishing / end_terms_vanish 检查 z(w̃2)^{2^t-1} z(w̃3)^{2^{t-1}-3}
与 Σ w̃4^d ⊗ w̃4^{q-1-d}（q = 2^{t-2}）的乘积。
"""

from typing import Dict, Optional

import numpy as np

from ..grassmann import IdealSpec, ideal_generators, known_gb
from ..groebner import is_standard, normal_form
from ..quotient import QuotientAlgebra, build_algebra
from .kernel import SlicedTensor
from swalg.logger_config import get_module_logger

logger = get_module_logger()

W4_POS = 2  # w4 在 k=4 指数向量中的位置


def psi_check(t: int, sample: Optional[int] = None, seed: int = 0) -> bool:
    """ψ 的良定义性与基单项式的单射性

    Args:
        t: t >= 4
        sample: 只抽取这么多个 σ（None 表示全部）
        seed: 抽样种子
    """
    if t < 4:
        raise ValueError(f"psi_check 需要 t >= 4，得到 t={t}")
    source = IdealSpec(n=2 ** t - 1, k=3)
    F = known_gb(2 ** t - 2, 4)

    for g in ideal_generators(source):
        if g and normal_form(g, F):
            logger.warning(f"t={t}: I_{{{source.n},3}} 的生成元 {g} 不在 I_{{{2 ** t - 2},4}} 中")
            return False

    W3 = build_algebra(source)
    sigmas = [W3.ring.unpack(key) for key in W3.basis]
    if sample is not None and sample < len(sigmas):
        rng = np.random.default_rng(seed)
        picked = rng.choice(len(sigmas), size=sample, replace=False)
        sigmas = [sigmas[i] for i in sorted(picked)]

    ring4 = F.ring
    images = set()
    for b, c in sigmas:
        for d in range(2 ** (t - 2) - 2):
            key = ring4.pack((b, c, d))
            if not is_standard(F, key):
                logger.warning(f"t={t}: w2^{b}*w3^{c}*w4^{d} 不是标准单项式")
                return False
            images.add(key)
    count = len(sigmas) * (2 ** (t - 2) - 2)
    if len(images) != count:
        logger.warning(f"t={t}: 像单项式有重复（{len(images)} != {count}）")
        return False
    logger.debug(f"t={t}: ψ 检查通过，{len(sigmas)} 个 σ")
    return True


def _z_product(A: QuotientAlgebra, a: int, b: int) -> SlicedTensor:
    kernel = SlicedTensor.unit(A)
    for pos, e in ((0, a), (1, b)):
        for _ in range(e):
            kernel = kernel.times_z(pos)
    return kernel


def map_through_psi(kernel: SlicedTensor, target: QuotientAlgebra) -> SlicedTensor:
    """(ψ⊗ψ)(x)：σ 的像是 target 中同名的基单项式"""
    source = kernel.algebra
    ring = target.ring
    blocks = {}
    for p, m in kernel.blocks.items():
        q = kernel.degree - p
        rows = [target.index[ring.pack(source.ring.unpack(source.basis[j]) + (0,))] - target.degree_slice(p)[0]
                for j in range(*source.degree_slice(p))]
        cols = [target.index[ring.pack(source.ring.unpack(source.basis[j]) + (0,))] - target.degree_slice(q)[0]
                for j in range(*source.degree_slice(q))]
        out = np.zeros((target.slice_dimension(p), target.slice_dimension(q)), dtype=np.uint8)
        out[np.ix_(rows, cols)] = m
        blocks[p] = out
    return SlicedTensor(target, kernel.degree, blocks)


def _psi_image(t: int) -> SlicedTensor:
    """(ψ⊗ψ)(z)，z = z(w̃2)^{2^t-1} z(w̃3)^{2^{t-1}-3}，同时确认 z 本身非零"""
    a, b = 2 ** t - 1, 2 ** (t - 1) - 3
    W3 = build_algebra(IdealSpec(n=2 ** t - 1, k=3))
    W4 = build_algebra(IdealSpec(n=2 ** t - 2, k=4))
    z = _z_product(W3, a, b)
    if not z:
        raise AssertionError(f"t={t}: z 在 W_{{{2 ** t - 1},3}}^⊗2 中为零")
    image = map_through_psi(z, W4)
    assert image == _z_product(W4, a, b)
    return image


def psi_sum_nonvanishing(t: int) -> bool:
    """(ψ⊗ψ)(z) · Σ_{d=2}^{q-3} w̃4^d ⊗ w̃4^{q-1-d} ≠ 0（t >= 5，t=4 时和为空）"""
    if t < 5:
        raise ValueError(f"t={t} 时求和区间为空，需要 t >= 5")
    q = 2 ** (t - 2)
    image = _psi_image(t)
    total = None
    for d in range(2, q - 2):
        term = image.times_simple(W4_POS, d, q - 1 - d)
        total = term if total is None else total + term
    return bool(total)


def end_terms_vanish(t: int) -> Dict[int, bool]:
    """d ∈ {0, 1, q-2, q-1} 时 x_d = (ψ⊗ψ)(z)·(w̃4^d ⊗ w̃4^{q-1-d}) 是否为零"""
    if t < 4:
        raise ValueError(f"end_terms_vanish 需要 t >= 4，得到 t={t}")
    q = 2 ** (t - 2)
    image = _psi_image(t)
    return {d: not image.times_simple(W4_POS, d, q - 1 - d) for d in sorted({0, 1, q - 2, q - 1})}
