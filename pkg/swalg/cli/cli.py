"""
swalg 命令行工具

子命令：
- gb          计算/加载 I_{n,k} 的约化 Gröbner 基，写入缓存文件
- nf          多项式模 I_{n,k} 的范式
- identities  验证 g 多项式恒等式
- height      生成元高度
- cl          W_{n,k} 的杯长与见证单项式
- zcl         零因子杯长（精确搜索或指定指数的非零性证书）
- report      汇总表

退出码：0 成功；1 验证/检查失败；2 用法错误；130 用户中断
"""

import argparse
import json
import logging
import sys
from typing import Any, List, Optional, Sequence

from pydantic import ValidationError
from tabulate import tabulate

from ..config import ConfigError, RunConfig
from ..f2poly import PolynomialSyntaxError, parse
from ..grassmann import (
    IDENTITY_REGISTRY,
    IdealSpec,
    KnownBasisMismatchError,
    NoKnownBasisError,
    get_identity,
    known_gb,
    obtain_basis,
    reduced_basis,
    verify_identities,
)
from ..groebner import GroebnerBasis, normal_form, reduce_groebner_basis
from ..logger_config import get_module_logger, log_manager
from ..performance.cache import BasisCache, basis_to_payload
from ..quotient import QuotientAlgebra, build_algebra, cup_length_W, dim_profile, heights
from ..zcltensor import ZclBudgetExceeded, witness_nonzero, zcl_exact
from .report import KNOWN_ZCL, build_row, expected_cl, expected_heights, render_text

logger = get_module_logger()

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERRUPTED = 130


class UsageError(Exception):
    """参数合法但取值无效（退出码 2）"""


def parse_n_range(text: str) -> List[int]:
    """'16' -> [16]；'14..17' -> [14, 15, 16, 17]"""
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"无效的 n: {text!r}（应为整数或 a..b）") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"无效的 n 区间: {text!r}")
    return list(range(lo, hi + 1))


def parse_exponents(text: str) -> List[int]:
    try:
        exps = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"无效的指数组: {text!r}（应为 a,b,c）") from None
    if any(e < 0 for e in exps):
        raise argparse.ArgumentTypeError(f"指数不能为负: {text!r}")
    return exps


class SwalgCLI:
    """swalg 命令行接口"""

    def __init__(self):
        self.config: Optional[RunConfig] = None
        self.parser = self._create_parser()

    def _create_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog='swalg',
            description='GF(2) 上的 Gröbner 基、Stiefel–Whitney 类高度、杯长与零因子杯长',
            formatter_class=argparse.RawDescriptionHelpFormatter,
            epilog="""
Examples:
  swalg gb --n 16 --k 4 --verify-known          # 计算并交叉验证已知基
  swalg nf --n 16 --k 4 --poly "w4^7"           # 范式
  swalg identities --id a,b --t-max 6           # 验证恒等式
  swalg height --n 14..17 --check               # 高度并与公式比对
  swalg zcl --n 15 --witness 15,5,3             # 非零性证书
  swalg report --n 14..17 --k 4 --check --json  # 汇总表
            """
        )

        parser.add_argument('--config', type=str, default=None,
                            help='配置文件路径（YAML 或 JSON）')
        parser.add_argument('--verbose', '-v', action='store_true', help='详细输出')
        parser.add_argument('--quiet', '-q', action='store_true', help='安静模式')

        subparsers = parser.add_subparsers(dest='command', help='可用命令')
        self._add_gb_command(subparsers)
        self._add_nf_command(subparsers)
        self._add_identities_command(subparsers)
        self._add_height_command(subparsers)
        self._add_cl_command(subparsers)
        self._add_zcl_command(subparsers)
        self._add_report_command(subparsers)
        return parser

    @staticmethod
    def _add_common(p: argparse.ArgumentParser, n_default: Optional[str] = None):
        if n_default is None:
            p.add_argument('--n', type=parse_n_range, required=True, help='n 或区间 a..b')
        else:
            p.add_argument('--n', type=parse_n_range, default=parse_n_range(n_default),
                           help=f'n 或区间 a..b（默认: {n_default}）')
        p.add_argument('--k', type=int, default=4, help='k（默认: 4）')
        p.add_argument('--json', action='store_true', help='JSON 输出')
        p.add_argument('--cache-dir', type=str, default=None, help='Gröbner 基缓存目录')
        p.add_argument('--no-cache', action='store_true', help='不读写磁盘缓存')
        p.add_argument('--threads', type=int, default=None, help='工作进程数')
        p.add_argument('--seed', type=int, default=None, help='随机种子')
        p.add_argument('--check', action='store_true', help='与已知公式比对，不符时退出码 1')

    def _add_gb_command(self, subparsers):
        gb_parser = subparsers.add_parser('gb', help='约化 Gröbner 基')
        self._add_common(gb_parser)
        gb_parser.add_argument('--verify-known', action='store_true',
                               help='与 Buchberger 重新计算的结果交叉验证已知基')
        gb_parser.set_defaults(func=self.cmd_gb)

    def _add_nf_command(self, subparsers):
        nf_parser = subparsers.add_parser('nf', help='多项式的范式')
        self._add_common(nf_parser)
        nf_parser.add_argument('--poly', type=str, required=True, help='多项式，例如 "w2^3 + w3^2"')
        nf_parser.set_defaults(func=self.cmd_nf)

    def _add_identities_command(self, subparsers):
        id_parser = subparsers.add_parser('identities', help='验证 g 多项式恒等式')
        id_parser.add_argument('--id', type=str, default=None,
                               help=f"逗号分隔的恒等式编号（默认全部: {','.join(sorted(IDENTITY_REGISTRY))}）")
        id_parser.add_argument('--t-min', type=int, default=None, help='最小 t')
        id_parser.add_argument('--t-max', type=int, default=None, help='最大 t')
        id_parser.add_argument('--json', action='store_true', help='JSON 输出')
        id_parser.add_argument('--threads', type=int, default=None, help='工作进程数')
        id_parser.add_argument('--seed', type=int, default=None, help='随机种子')
        id_parser.set_defaults(func=self.cmd_identities)

    def _add_height_command(self, subparsers):
        height_parser = subparsers.add_parser('height', help='生成元高度')
        self._add_common(height_parser)
        height_parser.set_defaults(func=self.cmd_height)

    def _add_cl_command(self, subparsers):
        cl_parser = subparsers.add_parser('cl', help='W 的杯长')
        self._add_common(cl_parser)
        cl_parser.set_defaults(func=self.cmd_cl)

    def _add_zcl_command(self, subparsers):
        zcl_parser = subparsers.add_parser('zcl', help='零因子杯长')
        self._add_common(zcl_parser)
        mode = zcl_parser.add_mutually_exclusive_group()
        mode.add_argument('--exact', action='store_true', help='精确搜索（默认）')
        mode.add_argument('--witness', type=parse_exponents, default=None,
                          help='只检查 Π z(w̃_i)^{a_i} 是否非零，例如 15,5,3')
        zcl_parser.add_argument('--max-steps', type=int, default=None, help='张量乘法步数上限')
        zcl_parser.add_argument('--memory-mb', type=int, default=None, help='内存预算（MB）')
        zcl_parser.set_defaults(func=self.cmd_zcl)

    def _add_report_command(self, subparsers):
        report_parser = subparsers.add_parser('report', help='汇总表')
        self._add_common(report_parser, n_default='14..17')
        report_parser.add_argument('--max-steps', type=int, default=None, help='zcl 搜索步数上限')
        report_parser.set_defaults(func=self.cmd_report)

    def run(self, args: Optional[List[str]] = None) -> int:
        """运行CLI"""
        try:
            parsed_args = self.parser.parse_args(args)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE

        try:
            if parsed_args.quiet:
                log_manager.set_console_level(logging.ERROR)
            elif parsed_args.verbose:
                log_manager.set_console_level(logging.DEBUG)

            if not parsed_args.command:
                self.parser.print_help()
                return EXIT_USAGE

            self.config = self._load_config(parsed_args)
            return parsed_args.func(parsed_args)

        except (UsageError, ConfigError, PolynomialSyntaxError) as e:
            print(f"错误: {e}", file=sys.stderr)
            return EXIT_USAGE
        except KeyboardInterrupt:
            print("\n操作被用户中断", file=sys.stderr)
            return EXIT_INTERRUPTED
        except Exception as e:
            logger.exception(f"命令 {parsed_args.command} 执行失败")
            print(f"✗ 错误: {e}", file=sys.stderr)
            return EXIT_CHECK_FAILED

    # ==================== 公共辅助 ====================

    @staticmethod
    def _load_config(args) -> RunConfig:
        config = RunConfig.load(args.config)
        verbosity = 'quiet' if args.quiet else ('verbose' if args.verbose else None)
        return config.merged(
            threads=getattr(args, 'threads', None),
            seed=getattr(args, 'seed', None),
            cache_dir=getattr(args, 'cache_dir', None),
            cache_enabled=False if getattr(args, 'no_cache', False) else None,
            output='json' if getattr(args, 'json', False) else None,
            verbosity=verbosity,
            zcl_max_steps=getattr(args, 'max_steps', None),
            memory_budget_mb=getattr(args, 'memory_mb', None),
            identity_t_min=getattr(args, 't_min', None),
            identity_t_max=getattr(args, 't_max', None),
        )

    @staticmethod
    def _spec(n: int, k: int) -> IdealSpec:
        try:
            return IdealSpec(n=n, k=k)
        except ValidationError as e:
            raise UsageError(f"无效的 (n, k) = ({n}, {k}): {e.errors()[0]['msg']}") from None

    def _cache(self) -> BasisCache:
        return BasisCache(cache_dir=str(self.config.cache_dir), enabled=self.config.cache_enabled)

    def _basis(self, spec: IdealSpec, cache: Optional[BasisCache] = None) -> GroebnerBasis:
        return obtain_basis(spec, n_workers=self.config.threads, cache=cache or self._cache())

    def _algebra(self, spec: IdealSpec) -> QuotientAlgebra:
        return build_algebra(spec, gb=self._basis(spec))

    def _emit(self, payload: Any, text: str):
        if self.config.output == 'json':
            print(json.dumps(payload, ensure_ascii=False, indent=2))
        else:
            print(text)

    # ==================== 命令实现 ====================

    def cmd_gb(self, args) -> int:
        """约化 Gröbner 基"""
        cache = self._cache()
        payloads, lines, failed = [], [], False
        for n in args.n:
            spec = self._spec(n, args.k)
            basis = self._basis(spec, cache)
            payload = basis_to_payload(n, basis)
            path = cache.path_for(n, basis.ring)
            payload['cache_file'] = str(path) if path else None

            lines.append(f"✓ {spec}: {len(basis)} 个生成元，首项 "
                         f"{', '.join(str(m) for m in basis.lm_monomials())}")
            if self.config.verbosity == 'verbose':
                lines.extend(f"    {g}" for g in basis.generators)
            if path:
                lines.append(f"  缓存文件: {path}")

            if args.verify_known:
                status = self._verify_known(spec)
                payload['verify_known'] = status
                if status == 'mismatch':
                    failed = True
                    lines.append(f"✗ {spec}: 已知基与 Buchberger 结果不一致")
                elif status == 'match':
                    lines.append(f"✓ {spec}: 已知基与 Buchberger 结果一致")
                else:
                    lines.append(f"  {spec}: 不属于已知基族，跳过交叉验证")
            payloads.append(payload)

        self._emit(payloads if len(payloads) > 1 else payloads[0], "\n".join(lines))
        return EXIT_CHECK_FAILED if failed else EXIT_OK

    def _verify_known(self, spec: IdealSpec) -> str:
        try:
            known = reduce_groebner_basis(known_gb(spec.n, spec.k))
        except NoKnownBasisError:
            return 'not-applicable'
        except KnownBasisMismatchError:
            return 'mismatch'
        fresh = reduced_basis(spec, n_workers=self.config.threads)
        return 'match' if known.generators == fresh.generators else 'mismatch'

    def cmd_nf(self, args) -> int:
        """范式"""
        if len(args.n) != 1:
            raise UsageError("nf 只接受单个 n")
        spec = self._spec(args.n[0], args.k)
        p = parse(args.poly, spec.ring)
        result = normal_form(p, self._basis(spec))
        payload = {'n': spec.n, 'k': spec.k, 'poly': str(p),
                   'normal_form': str(result), 'in_ideal': result.is_zero()}
        self._emit(payload, f"nf({p}) mod {spec} = {result}")
        return EXIT_OK

    def cmd_identities(self, args) -> int:
        """恒等式验证"""
        ids = sorted(IDENTITY_REGISTRY) if args.id is None else [s.strip() for s in args.id.split(",") if s.strip()]
        for identity_id in ids:
            try:
                get_identity(identity_id)
            except KeyError as e:
                raise UsageError(e.args[0]) from None

        t_range = (self.config.identity_t_min, self.config.identity_t_max)
        reports = verify_identities(ids, t_range=t_range, seed=self.config.seed, n_workers=self.config.threads)

        rows = []
        for report in reports:
            for result in report.results:
                rows.append([
                    report.identity_id,
                    result.t,
                    "PASS" if result.passed else "FAIL",
                    f"{result.elapsed_ms:.1f}",
                    result.counterexample or "",
                ])
        text = tabulate(rows, headers=['id', 't', '结果', 'ms', '反例'], tablefmt='plain')
        self._emit([r.model_dump() for r in reports], text)
        return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED

    def cmd_height(self, args) -> int:
        """生成元高度"""
        payloads, rows, failed = [], [], False
        for n in args.n:
            spec = self._spec(n, args.k)
            A = self._algebra(spec)
            hts = heights(A)
            mark = ""
            if args.check and spec.k == 4:
                want = expected_heights(n)
                ok = want is None or want == hts
                failed = failed or not ok
                mark = "✓" if ok else f"✗ 期望 {want}"
            payloads.append({'n': n, 'k': spec.k, 'heights': hts, 'dimension': A.dimension})
            rows.append([n, spec.k, *hts.values(), A.dimension, mark])
        headers = ['n', 'k', *(f"ht({name})" for name in payloads[0]['heights']), 'dim W', 'check']
        self._emit(payloads, tabulate(rows, headers=headers, tablefmt='grid'))
        return EXIT_CHECK_FAILED if failed else EXIT_OK

    def cmd_cl(self, args) -> int:
        """杯长"""
        payloads, rows, failed = [], [], False
        for n in args.n:
            spec = self._spec(n, args.k)
            A = self._algebra(spec)
            hts = heights(A)
            cl, witness = cup_length_W(A)
            mark = ""
            if args.check and spec.k == 4:
                want = expected_cl(n)
                ok = want is None or want == cl
                failed = failed or not ok
                mark = "✓" if ok else f"✗ 期望 {want}"
            payloads.append({'n': n, 'k': spec.k, 'heights': hts, 'cl': cl, 'witness': str(witness),
                             'dim_profile': dim_profile(A)})
            rows.append([n, spec.k, cl, str(witness), mark])
        self._emit(payloads, tabulate(rows, headers=['n', 'k', 'cl(W)', 'witness', 'check'], tablefmt='grid'))
        return EXIT_CHECK_FAILED if failed else EXIT_OK

    def cmd_zcl(self, args) -> int:
        """零因子杯长"""
        payloads, lines, code = [], [], EXIT_OK
        for n in args.n:
            spec = self._spec(n, args.k)
            A = self._algebra(spec)

            if args.witness is not None:
                if len(args.witness) != A.n_generators:
                    raise UsageError(f"--witness 需要 {A.n_generators} 个指数")
                nonzero, term = witness_nonzero(A, args.witness)
                exps = ",".join(map(str, args.witness))
                payloads.append({'n': n, 'k': spec.k, 'exponents': args.witness, 'nonzero': nonzero,
                                 'witness_term': [str(term[0]), str(term[1])] if term else None})
                lines.append(f"{'✓' if nonzero else '✗'} {spec}: P({exps}) {'≠' if nonzero else '='} 0"
                             + (f"，存活项 {term[0]} ⊗ {term[1]}" if term else ""))
                continue

            try:
                zcl, certificate = zcl_exact(A, max_steps=self.config.zcl_max_steps,
                                             memory_budget_mb=self.config.memory_budget_mb,
                                             n_workers=self.config.threads)
            except ZclBudgetExceeded as e:
                payloads.append({'n': n, 'k': spec.k, 'zcl_lower_bound': e.lower_bound,
                                 'frontier': [list(f) for f in e.frontier]})
                lines.append(f"✗ {spec}: 超出预算，zcl(W) >= {e.lower_bound}")
                code = EXIT_CHECK_FAILED
                continue

            payloads.append(certificate.to_dict())
            line = (f"✓ zcl(W_{{{n},{spec.k}}}) = {zcl}，指数 {certificate.exponents}，"
                    f"存活项 {certificate.sample_term[0]} ⊗ {certificate.sample_term[1]}，"
                    f"{len(certificate.frontier)} 个极大指数组")
            if args.check and spec.k == 4 and n in KNOWN_ZCL and KNOWN_ZCL[n] != zcl:
                line = f"✗ zcl(W_{{{n},{spec.k}}}) = {zcl}，期望 {KNOWN_ZCL[n]}"
                code = EXIT_CHECK_FAILED
            lines.append(line)

        self._emit(payloads if len(payloads) > 1 else payloads[0], "\n".join(lines))
        return code

    def cmd_report(self, args) -> int:
        """汇总表"""
        rows = []
        for n in args.n:
            spec = self._spec(n, args.k)
            rows.append(build_row(self._algebra(spec), self.config, check=args.check))
        self._emit([row.to_dict() for row in rows], render_text(rows))
        if args.check and any(row.mismatches for row in rows):
            for row in rows:
                for problem in row.mismatches:
                    print(f"✗ n={row.n}: {problem}", file=sys.stderr)
            return EXIT_CHECK_FAILED
        return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """命令行入口点"""
    cli = SwalgCLI()
    return cli.run(list(argv) if argv is not None else None)


if __name__ == '__main__':
    sys.exit(main())
