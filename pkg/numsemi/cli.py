#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
numsemi 命令行工具
分析、最小化、构造、变换与交叉验证望远镜序列

退出码：0 成功，1 领域错误（输出错误名），2 用法错误
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

import colorlog

from .base import (
    InvalidProgram,
    MinimalityConditionFailed,
    NumsemiError,
    SizeCapExceeded,
    int_to_json,
    ints_to_json,
)
from .config import CLI_CONFIG, LIMITS_CONFIG, LOGGING_CONFIG
from .construct import (
    Compound,
    ConstructionRequest,
    Geometric,
    Supersymmetric,
    build,
    enumerate_sequences,
    family,
    validate_minimal,
)
from .minimize import is_free, is_minimal_telescopic, minimize_telescopic
from .oracle import (
    IntPolynomial,
    apery_bf,
    frobenius_from_apery,
    gaps,
    genus_from_apery,
    is_minimal_bf,
    minimal_generators,
    tuenter_check,
)
from .seqcore import Sequence, gcd_profile, normalize_head, parse_sequence
from .telescopic import TelescopicSequence, telescopic_witness
from .transforms import Pi, Rho, Swap, Tau, TransformProgram, apply_program, morph, trace_program

logger = logging.getLogger("numsemi.cli")

DEFAULT_POLYNOMIALS = ('1', '0,1', '0,0,1', '0,0,0,1')


def setup_logging(level: Optional[str] = None) -> None:
    """为 numsemi 命名空间配置彩色控制台日志（stderr），可选文件日志"""
    root = logging.getLogger("numsemi")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.setLevel(level or LOGGING_CONFIG['level'])
    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(colorlog.ColoredFormatter(
        LOGGING_CONFIG['format'], log_colors=LOGGING_CONFIG['colors']))
    root.addHandler(console)
    if LOGGING_CONFIG['file']:
        file_handler = logging.FileHandler(LOGGING_CONFIG['file'], encoding='utf-8')
        file_handler.setFormatter(logging.Formatter(LOGGING_CONFIG['file_format']))
        root.addHandler(file_handler)
    root.propagate = False


def _sequence_arg(text: str) -> Sequence:
    try:
        return parse_sequence(text)
    except NumsemiError as e:
        raise argparse.ArgumentTypeError(f"无效序列 {text!r}: {e}")


def _int_list_arg(text: str) -> Tuple[int, ...]:
    stripped = text.strip()
    if not stripped:
        return ()
    try:
        values = tuple(int(part) for part in stripped.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f"无效的整数列表: {text!r}")
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"列表中不能有负数: {text!r}")
    return values


def _natural_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"无效的整数: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"不能为负数: {text!r}")
    return value


def _pair_arg(text: str) -> Tuple[int, int]:
    values = _int_list_arg(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"需要两个逗号分隔的整数: {text!r}")
    return values


def _poly_arg(text: str) -> IntPolynomial:
    try:
        return IntPolynomial.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _compound_arg(text: str) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    if ';' not in text:
        raise argparse.ArgumentTypeError(f"复合型参数格式为 ALIST;BLIST: {text!r}")
    left, right = text.split(';', 1)
    return _int_list_arg(left), _int_list_arg(right)


def _head_normalized(G: Sequence, diagnostics: List[Dict[str, Any]]) -> Sequence:
    normalized = normalize_head(G)
    if normalized is not G:
        diagnostics.append({'warning': 'g_1 = 0，已交换前两项', 'sequence': normalized.to_text()})
    return normalized


def _apery_payload(apery: Dict[int, int], cap: int) -> Dict[str, Any]:
    values = [apery[r] for r in range(len(apery))]
    payload: Dict[str, Any] = {'size': len(values), 'values': ints_to_json(values[:cap])}
    if len(values) > cap:
        payload['truncated'] = True
    return payload


def cmd_analyze(args: argparse.Namespace, diagnostics: List[Dict[str, Any]]) -> Dict[str, Any]:
    G = _head_normalized(args.sequence, diagnostics)
    profile = gcd_profile(G)
    witness = telescopic_witness(G)
    telescopic = witness is None
    result: Dict[str, Any] = {
        'sequence': G.to_text(),
        'gcd': int_to_json(profile.gcd_G),
        'd': ints_to_json(profile.d),
        'c': ints_to_json(profile.c),
        'telescopic': telescopic,
        'witness': witness,
    }
    wrapped = TelescopicSequence(G) if telescopic else None
    if wrapped is not None:
        result['z_decomposition'] = wrapped.decomposition.to_dict()
        result['minimal'] = is_minimal_telescopic(G)
    else:
        result['minimal'] = is_minimal_bf(G)
    result['minimal_generators'] = minimal_generators(G).to_text()
    if profile.gcd_G != 1:
        result['free'] = False
        return result

    g1 = G.terms[0]
    if wrapped is not None and g1 <= LIMITS_CONFIG['APERY_SIZE_CAP']:
        apery = wrapped.apery()
        result['apery_method'] = 'closed'
        result['frobenius'] = int_to_json(wrapped.frobenius())
        result['genus'] = int_to_json(wrapped.genus())
    else:
        summary = gaps(G)
        apery = apery_bf(G, g1)
        result['apery_method'] = 'brute_force'
        result['frobenius'] = int_to_json(summary.frobenius)
        result['genus'] = int_to_json(summary.genus)
    result['apery'] = _apery_payload(apery, args.apery_cap)
    result['embedding_dimension'] = minimal_generators(G).k
    result['symmetric'] = int(result['frobenius']) == 2 * int(result['genus']) - 1
    try:
        result['free'] = is_free(G)
    except SizeCapExceeded as e:
        result['free'] = None
        diagnostics.append(e.to_dict())
    return result


def cmd_minimize(args: argparse.Namespace, diagnostics: List[Dict[str, Any]]) -> Dict[str, Any]:
    G = _head_normalized(args.sequence, diagnostics)
    minimal, trace = minimize_telescopic(G)
    return {'sequence': minimal.to_text(), 'steps': len(trace), 'trace': trace.to_list()}


def cmd_construct(args: argparse.Namespace, diagnostics: List[Dict[str, Any]]) -> Dict[str, Any]:
    req = ConstructionRequest(args.d, args.c, args.z)
    G = build(req)
    minimal, violation = validate_minimal(req)
    if args.require_minimal and not minimal:
        raise MinimalityConditionFailed(f"构造结果不是最小序列: {violation}", index=violation.j)
    return {
        'request': req.to_dict(),
        'sequence': G.to_text(),
        'minimal': minimal,
        'violation': violation.to_dict() if violation else None,
    }


def cmd_family(args: argparse.Namespace, diagnostics: List[Dict[str, Any]]) -> Dict[str, Any]:
    if args.geometric is not None:
        if len(args.geometric) != 3:
            raise argparse.ArgumentTypeError("--geometric 需要 a,b,k")
        spec = Geometric(*args.geometric)
    elif args.supersymmetric is not None:
        spec = Supersymmetric(args.supersymmetric)
    else:
        spec = Compound(*args.compound)
    G = family(spec)
    return {'family': spec.to_dict(), 'sequence': G.to_text(), 'c': ints_to_json(gcd_profile(G).c)}


def _load_program(path: str) -> TransformProgram:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            payload = json.load(f)
    except OSError as e:
        raise InvalidProgram(f"无法读取程序文件 {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InvalidProgram(f"程序文件不是合法 JSON: {e}") from e
    return TransformProgram.from_list(payload)


def cmd_transform(args: argparse.Namespace, diagnostics: List[Dict[str, Any]]) -> Dict[str, Any]:
    if args.program is not None:
        program = _load_program(args.program)
    elif args.rho is not None:
        program = TransformProgram((Rho(args.rho),))
    elif args.tau is not None:
        program = TransformProgram((Tau(*args.tau),))
    elif args.pi is not None:
        program = TransformProgram((Pi(args.pi),))
    else:
        program = TransformProgram((Swap(*args.swap),))
    result: Dict[str, Any] = {'program': program.to_list(), 'notation': program.notation()}
    if args.trace:
        snapshots = trace_program(args.sequence, program)
        result['trace'] = [s.to_text() for s in snapshots]
        result['sequence'] = snapshots[-1].to_text()
    else:
        result['sequence'] = apply_program(args.sequence, program).to_text()
    return result


def cmd_morph(args: argparse.Namespace, diagnostics: List[Dict[str, Any]]) -> Dict[str, Any]:
    G = _head_normalized(args.source, diagnostics)
    H = _head_normalized(args.target, diagnostics)
    program = morph(G, H)
    return {
        'source_gcd': int_to_json(program.source_gcd),
        'notation': program.notation(),
        'program': program.to_list(),
    }


def _check(name: str, lhs: Any, rhs: Any) -> Dict[str, Any]:
    return {
        'check': name,
        'status': 'PASS' if lhs == rhs else 'FAIL',
        'closed': str(lhs),
        'oracle': str(rhs),
    }


def cmd_verify(args: argparse.Namespace, diagnostics: List[Dict[str, Any]]) -> Dict[str, Any]:
    G = _head_normalized(args.sequence, diagnostics)
    wrapped = TelescopicSequence(G)
    apery_closed = wrapped.apery()
    summary = gaps(G)
    g1 = G.terms[0]
    apery_oracle = apery_bf(G, g1)
    frobenius = wrapped.frobenius()
    genus = wrapped.genus()
    checks = [
        _check('apery', sorted(apery_closed.values()), sorted(apery_oracle.values())),
        _check('frobenius', frobenius, summary.frobenius),
        _check('frobenius_from_apery', frobenius, frobenius_from_apery(apery_oracle, g1)),
        _check('genus', genus, summary.genus),
        _check('genus_from_apery', genus, genus_from_apery(apery_oracle, g1)),
        _check('symmetric', frobenius, 2 * summary.genus - 1),
    ]
    window = range(0, frobenius + 2 * g1 + 1)
    gap_set = set(summary.gaps)
    mismatches = [n for n in window if wrapped.contains(n) == (n in gap_set)]
    checks.append(_check('membership', mismatches[:5], []))

    polynomials = [args.poly] if args.poly is not None else [IntPolynomial.parse(p) for p in DEFAULT_POLYNOMIALS]
    t = g1 if args.t is None else args.t
    for f in polynomials:
        lhs, rhs = wrapped.gap_identity(f)
        checks.append(_check(f'gap_identity[{f}]', lhs, rhs))
        lhs, rhs = tuenter_check(G, t, f)
        checks.append(_check(f'tuenter[t={t};{f}]', lhs, rhs))
    return {'sequence': G.to_text(), 'checks': checks,
            'all_passed': all(c['status'] == 'PASS' for c in checks)}


def cmd_enumerate(args: argparse.Namespace, diagnostics: List[Dict[str, Any]]) -> Dict[str, Any]:
    found = []
    for G in enumerate_sequences(args.d, args.c, args.z_bound, args.minimal_only):
        if args.limit is not None and len(found) >= args.limit:
            diagnostics.append({'warning': f'已达到 --limit {args.limit}，结果被截断'})
            break
        found.append(G.to_text())
    return {'count': len(found), 'sequences': found}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='输出机器可读的 JSON')
    common.add_argument('--apery-cap', type=_natural_arg, default=LIMITS_CONFIG['APERY_PRINT_CAP'],
                        help='打印 Apéry 集的最大元素数')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='输出调试日志')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='只输出错误日志')

    parser = argparse.ArgumentParser(prog=CLI_CONFIG['PROG'], description="望远镜序列与自由数值半群工具")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('analyze', parents=[common], help='分析序列')
    p.add_argument('sequence', type=_sequence_arg)
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser('minimize', parents=[common], help='最小化望远镜序列')
    p.add_argument('sequence', type=_sequence_arg)
    p.set_defaults(handler=cmd_minimize)

    p = sub.add_parser('construct', parents=[common], help='由 (d, c, z) 构造')
    p.add_argument('--d', type=_natural_arg, required=True)
    p.add_argument('--c', type=_int_list_arg, required=True, help='c_2,…,c_k')
    p.add_argument('--z', type=_int_list_arg, required=True, help='z_2,…,z_k（不含 z_1 = d）')
    p.add_argument('--require-minimal', action='store_true')
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser('family', parents=[common], help='生成经典族')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--geometric', type=_int_list_arg, metavar='a,b,k')
    group.add_argument('--supersymmetric', type=_int_list_arg, metavar='LIST')
    group.add_argument('--compound', type=_compound_arg, metavar='ALIST;BLIST')
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser('transform', parents=[common], help='执行单步变换或程序文件')
    p.add_argument('sequence', type=_sequence_arg)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--program', metavar='FILE')
    group.add_argument('--rho', type=_natural_arg, metavar='N')
    group.add_argument('--tau', type=_pair_arg, metavar='G,M')
    group.add_argument('--pi', type=_natural_arg, metavar='N')
    group.add_argument('--swap', type=_pair_arg, metavar='I,J')
    p.add_argument('--trace', action='store_true', help='输出每一步的中间序列')
    p.set_defaults(handler=cmd_transform)

    p = sub.add_parser('morph', parents=[common], help='生成 φ_{G,H} 变换程序')
    p.add_argument('source', type=_sequence_arg)
    p.add_argument('target', type=_sequence_arg)
    p.set_defaults(handler=cmd_morph)

    p = sub.add_parser('verify', parents=[common], help='闭式与暴力结果交叉验证')
    p.add_argument('sequence', type=_sequence_arg)
    p.add_argument('--poly', type=_poly_arg, help='多项式系数，常数项在前，例如 0,0,1')
    p.add_argument('--t', type=_natural_arg, help='一般间隙恒等式中的 t，默认 g_1')
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('enumerate', parents=[common], help='按界枚举构造结果')
    p.add_argument('--d', type=_natural_arg, required=True)
    p.add_argument('--c', type=_int_list_arg, required=True)
    p.add_argument('--z-bound', type=_natural_arg, required=True)
    p.add_argument('--minimal-only', action='store_true')
    p.add_argument('--limit', type=_natural_arg)
    p.set_defaults(handler=cmd_enumerate)
    return parser


def _echo(args: argparse.Namespace) -> Dict[str, Any]:
    echo = {}
    for key, value in sorted(vars(args).items()):
        if key in ('handler', 'json', 'verbose', 'quiet') or value is None:
            continue
        if isinstance(value, (Sequence, IntPolynomial)):
            echo[key] = str(value)
        elif isinstance(value, tuple):
            echo[key] = json.loads(json.dumps(value, default=str))
        else:
            echo[key] = value
    return echo


def _format_value(value: Any) -> str:
    if isinstance(value, list) and all(isinstance(v, str) for v in value):
        return ','.join(value)
    if isinstance(value, (list, dict)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


def _print_report(report: Dict[str, Any], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, ensure_ascii=False, indent=CLI_CONFIG['JSON_INDENT']))
        return
    if report["result"] is None:
        for item in report["diagnostics"]:
            if "error" in item:
                print(f"错误 {item['error']}: {item['message']}")
        return
    for key, value in report['result'].items():
        if key == 'checks':
            for check in value:
                print(f"{check['status']}  {check['check']}  closed={check['closed']}  oracle={check['oracle']}")
        elif key == 'trace' and value and isinstance(value[0], dict):
            for step in value:
                m = f", m={step['m']}" if step['m'] is not None else ''
                print(f"  情形{step['case']} (n={step['n']}{m}): "
                      f"{','.join(step['before'])} -> {','.join(step['after'])}")
        elif key == 'trace':
            # 每个快照本身是逗号分隔的序列
            print(f"{key}: {' -> '.join(value)}")
        else:
            print(f"{key}: {_format_value(value)}")
    for item in report['diagnostics']:
        print(f"注意: {_format_value(item)}")


def run(argv: Optional[List[str]] = None) -> int:
    """
    执行一条命令

    Returns:
        退出码：0 成功，1 领域错误或校验失败，2 用法错误
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    if args.verbose:
        setup_logging('DEBUG')
    elif args.quiet:
        setup_logging('ERROR')
    else:
        setup_logging()

    handler: Callable[..., Dict[str, Any]] = args.handler
    diagnostics: List[Dict[str, Any]] = []
    report: Dict[str, Any] = {'input': _echo(args), 'operation': args.command}
    exit_code = 0
    try:
        result = handler(args, diagnostics)
        report['success'] = result.get('all_passed', True)
        report['result'] = result
        if not report['success']:
            exit_code = 1
    except argparse.ArgumentTypeError as e:
        parser.print_usage(sys.stderr)
        print(f"{CLI_CONFIG['PROG']}: error: {e}", file=sys.stderr)
        return 2
    except NumsemiError as e:
        logger.debug(f"{args.command} 失败: {e.name}: {e}")
        diagnostics.append(e.to_dict())
        report['success'] = False
        report['result'] = None
        exit_code = 1
    report['diagnostics'] = diagnostics
    _print_report(report, args.json)
    return exit_code


def main():
    """命令行入口"""
    sys.exit(run())


if __name__ == "__main__":
    main()
