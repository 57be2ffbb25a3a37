"""
汇总报告：高度、cl(W)、zcl(W) 与引用的下界

每个 n 一行。--check 时与 k=4 的已知公式逐项比对：
    ht(w̃2) = 2^t-4，ht(w̃3) = 2^{t-1}-2，ht(w̃4) = 2^{t-1}-1-j（n = 2^t-j，j ∈ {0,1,2}；n = 2^t+1 时同 j=0）
    cl(W) = 2^t+2^{t-2}-5（n ∈ {2^t, 2^t+1}）
    zcl(W)：n ∈ {8,9,14,15,16,17}
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import pandas as pd
from tabulate import tabulate

from ..config import RunConfig
from ..grassmann import IdealSpec
from ..quotient import QuotientAlgebra, cup_length_W, heights
from ..zcltensor import ZclBudgetExceeded, zcl_exact
from swalg.logger_config import get_module_logger

logger = get_module_logger()

CITED = "paper-cited bound, not computed"

KNOWN_ZCL = {8: 8, 9: 8, 14: 21, 15: 23, 16: 23, 17: 23}


def _power_of_two(x: int) -> Optional[int]:
    return x.bit_length() - 1 if x > 0 and x & (x - 1) == 0 else None


def expected_heights(n: int) -> Optional[Dict[str, int]]:
    """k=4 的高度公式；n 不在 {2^t-2, ..., 2^t+1}（t >= 3）时为 None"""
    for j in (-1, 0, 1, 2):
        t = _power_of_two(n + j)
        if t is None or t < 3 or (j > 0 and t < 4):
            continue
        return {
            'w2': 2 ** t - 4,
            'w3': 2 ** (t - 1) - 2,
            'w4': 2 ** (t - 1) - 1 - max(j, 0),
        }
    return None


def expected_cl(n: int) -> Optional[int]:
    for j in (0, -1):
        t = _power_of_two(n + j)
        if t is not None and t >= 3:
            return 2 ** t + 2 ** (t - 2) - 5
    return None


def zcl_lower_bound(n: int) -> Optional[int]:
    """2^t+2^{t-1}+2^{t-2}-5，取满足 n >= 2^t-2 的最大 t（t >= 5，或 t = 4 且 n >= 15）"""
    t = (n + 2).bit_length() - 1
    if t >= 5 or (t == 4 and n >= 15):
        return 2 ** t + 2 ** (t - 1) + 2 ** (t - 2) - 5
    return None


@dataclass
class ReportRow:
    n: int
    k: int
    heights: Dict[str, int]
    cl: int
    cl_witness: str
    zcl: int
    zcl_exact: bool
    zcl_exponents: List[int] = field(default_factory=list)
    zcl_witness_term: List[str] = field(default_factory=list)
    zcl_bound: Optional[int] = None
    mismatches: List[str] = field(default_factory=list)

    def cited(self) -> Dict[str, int]:
        return {
            'cat_lower': self.cl + 1,
            'zcl_G_lower': self.zcl + 1,
            'tc_lower': self.zcl + 2,
        }

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'k': self.k,
            'heights': self.heights,
            'cl': self.cl,
            'cl_witness': self.cl_witness,
            'zcl': self.zcl,
            'zcl_status': 'exact' if self.zcl_exact else 'lower bound',
            'zcl_exponents': self.zcl_exponents,
            'witness_term': self.zcl_witness_term,
            'zcl_formula_lower_bound': self.zcl_bound,
            'cited': {**self.cited(), 'note': CITED},
            'mismatches': self.mismatches,
        }


def build_row(A: QuotientAlgebra, config: RunConfig, check: bool = False) -> ReportRow:
    n, k = A.spec.n, A.spec.k
    hts = heights(A)
    cl, witness = cup_length_W(A)
    try:
        zcl, certificate = zcl_exact(A, max_steps=config.zcl_max_steps,
                                     memory_budget_mb=config.memory_budget_mb, n_workers=config.threads)
        exact, exps, term = True, list(certificate.exponents), list(certificate.sample_term)
    except ZclBudgetExceeded as e:
        zcl, exact, exps, term = e.lower_bound, False, [], []

    row = ReportRow(n=n, k=k, heights=hts, cl=cl, cl_witness=str(witness), zcl=zcl, zcl_exact=exact,
                    zcl_exponents=exps, zcl_witness_term=term,
                    zcl_bound=zcl_lower_bound(n) if k == 4 else None)
    if check and k == 4:
        row.mismatches = _compare(row)
    return row


def _compare(row: ReportRow) -> List[str]:
    problems = []
    want = expected_heights(row.n)
    if want is not None:
        for name, value in want.items():
            if row.heights[name] != value:
                problems.append(f"ht({name}) = {row.heights[name]}，期望 {value}")
    want_cl = expected_cl(row.n)
    if want_cl is not None and row.cl != want_cl:
        problems.append(f"cl(W) = {row.cl}，期望 {want_cl}")
    want_zcl = KNOWN_ZCL.get(row.n)
    if want_zcl is not None and (not row.zcl_exact or row.zcl != want_zcl):
        problems.append(f"zcl(W) = {row.zcl}{'' if row.zcl_exact else '（下界）'}，期望 {want_zcl}")
    if row.zcl_exact and row.zcl_bound is not None and row.zcl < row.zcl_bound:
        problems.append(f"zcl(W) = {row.zcl} 低于下界公式 {row.zcl_bound}")
    return problems


def to_frame(rows: Sequence[ReportRow]) -> pd.DataFrame:
    records = []
    for row in rows:
        record = {'n': row.n, 'k': row.k}
        record.update({f"ht({name})": value for name, value in row.heights.items()})
        record['cl(W)'] = row.cl
        record['cl witness'] = row.cl_witness
        record['zcl(W)'] = row.zcl if row.zcl_exact else f">= {row.zcl}"
        record['zcl exps'] = ",".join(map(str, row.zcl_exponents)) or "-"
        record['formula bound'] = row.zcl_bound if row.zcl_bound is not None else "-"
        cited = row.cited()
        record['cat >='] = cited['cat_lower']
        record['TC >='] = cited['tc_lower']
        record['check'] = ("✓" if not row.mismatches else "✗") if row.k == 4 else "-"
        records.append(record)
    return pd.DataFrame.from_records(records)


def render_text(rows: Sequence[ReportRow]) -> str:
    table = tabulate(to_frame(rows), headers='keys', tablefmt='grid', showindex=False)
    note = f"cat >= cl(W)+1, zcl(G̃) >= zcl(W)+1, TC >= zcl(G̃)+1: {CITED}"
    return f"{table}\n{note}"
