"""二项式系数模 2"""


def binom_parity(m: int, j: int) -> int:
    """C(m, j) mod 2

    Lucas 定理：C(m, j) 为奇数当且仅当 j 与 m-j 的二进制没有公共的 1。
    """
    if not 0 <= j <= m:
        raise ValueError(f"binom_parity 需要 0 <= j <= m，实际 m={m}, j={j}")
    return int((j & (m - j)) == 0)


def multinomial_parity(parts) -> int:
    """多项式系数 (Σ a_i)! / Π a_i! 模 2：各部分两两二进制不相交时为 1"""
    seen = 0
    for a in parts:
        if a < 0:
            raise ValueError(f"多项式系数的各部分必须非负: {parts}")
        if seen & a:
            return 0
        seen |= a
    return 1
