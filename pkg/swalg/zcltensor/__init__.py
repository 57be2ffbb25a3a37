"""
zcltensor：W ⊗ W、零因子乘积、精确零因子杯长与非零性证书

核由 z(g_i) 生成
----------------
设 A 是由 g_1..g_s 生成的交换 GF(2) 代数，μ: A ⊗ A -> A 为乘法映射，
z(a) = 1 ⊗ a + a ⊗ 1，J 为 z(g_1)..z(g_s) 生成的理想。断言 ker μ = J。

J ⊆ ker μ：μ 是代数同态且 μ(z(g_i)) = 2g_i = 0。

ker μ ⊆ J：在 (A ⊗ A)/J 中 1 ⊗ g_i ≡ g_i ⊗ 1，于是对任意单项式 m 有
1 ⊗ m ≡ m ⊗ 1，线性扩张得 1 ⊗ a ≡ a ⊗ 1 对所有 a 成立。因此
u ⊗ v = (u ⊗ 1)(1 ⊗ v) ≡ uv ⊗ 1。若 x = Σ u_j ⊗ v_j ∈ ker μ，则
x ≡ (Σ u_j v_j) ⊗ 1 = μ(x) ⊗ 1 = 0。

推论：(ker μ)^m 由 (u ⊗ v)·Π z(g_i)^{a_i}（Σa_i = m）张成，而
(u ⊗ v)·P ≠ 0 蕴含 P ≠ 0，所以 (ker μ)^m ≠ 0 当且仅当存在 Σa_i = m 的
P = Π z(g_i)^{a_i} ≠ 0（取 u = v = 1）。由此

    zcl(A) = max{Σa_i : Π z(g_i)^{a_i} ≠ 0}

非零指数组构成下闭集；z(g_i)^{a} = Σ C(a,j) g_i^j ⊗ g_i^{a-j}，a > 2·ht(g_i)
时每一项都有一侧为零，故 a_i <= 2·ht(g_i)，搜索是有限的。
"""

from .kernel import SlicedTensor
from .psi import end_terms_vanish, map_through_psi, psi_check, psi_sum_nonvanishing
from .search import ZclBudgetExceeded, ZclCertificate, witness_nonzero, zcl_exact
from .tensor import TensorElement, mu, tensor_multiply, z_of_generator

__all__ = [
    "SlicedTensor",
    "TensorElement",
    "ZclBudgetExceeded",
    "ZclCertificate",
    "end_terms_vanish",
    "map_through_psi",
    "mu",
    "psi_check",
    "psi_sum_nonvanishing",
    "tensor_multiply",
    "witness_nonzero",
    "z_of_generator",
    "zcl_exact",
]
