#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
序列变换模块
收缩 ρ_n、粘接扩展 τ_{g,m}、删除 π_n 与对换，
以及折叠映射 R_G、重建映射 T_G 和两条等 gcd 望远镜序列之间的变换程序 φ_{G,H}
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple, Union

from .base import (
    GcdMismatch,
    IndexOutOfRange,
    InvalidProgram,
    NotAMember,
    NotCoprime,
    NotTelescopic,
    NumsemiError,
    ZeroMultiplier,
    int_from_json,
    int_to_json,
)
from .seqcore import Sequence, gcd_profile, normalize_head, remove_term, swap
from .telescopic import ZDecomposition, prefix_witness, semigroup_contains, z_decompose

logger = logging.getLogger("numsemi.transforms")


def rho(G: Sequence, n: int) -> Sequence:
    """
    ρ_n(G) = (G_{n−1}/c_n)×G_{n,k}

    Raises:
        IndexOutOfRange: k < 2 或 n 不在 2..k
        HeadZero: g_1 = 0
    """
    if not 2 <= n <= G.k:
        raise IndexOutOfRange(f"ρ_{n} 需要 2 ≤ n ≤ {G.k}", index=n)
    c_n = gcd_profile(G).c_at(n)
    head = tuple(g // c_n for g in G.terms[:n - 1])
    return Sequence(head + G.terms[n:])


def rho_first(G: Sequence) -> Sequence:
    """删除首项的收缩：(gcd(g_1, g_2), g_3, …, g_k)，与 ρ_2(G) 相同"""
    if G.k < 2:
        raise IndexOutOfRange(f"ρ_2 需要至少两项，实际 {G.k} 项", index=2)
    return rho(normalize_head(swap(G, 1, 2)), 2)


def tau(G: Sequence, g: int, m: int) -> Sequence:
    """
    τ_{g,m}(G) = (mG)×(g)

    gcd(G) = d 时要求 gcd(m, g/d) = 1，此时 c 序列末尾恰好追加 m

    Raises:
        ZeroMultiplier: m < 1
        NotAMember: g ∉ ⟨G⟩
        NotCoprime: gcd(m, g/d) ≠ 1
    """
    if m < 1:
        raise ZeroMultiplier(f"τ 的乘数必须 ≥ 1，实际 {m}")
    if not semigroup_contains(G, g):
        raise NotAMember(f"{g} ∉ ⟨{G}⟩")
    d = G.gcd()
    reduced = g // d if d else g
    if math.gcd(m, reduced) != 1:
        raise NotCoprime(f"gcd({m}, {reduced}) ≠ 1")
    return Sequence(tuple(m * x for x in G.terms) + (g,))


def pi(G: Sequence, n: int) -> Sequence:
    """π_n(G)：删除第 n 项"""
    return remove_term(G, n)


@dataclass(frozen=True)
class Rho:
    n: int
    op = 'rho'

    def apply(self, G: Sequence) -> Sequence:
        return rho(G, self.n)

    def to_dict(self) -> Dict[str, Any]:
        return {'op': self.op, 'n': self.n}

    def __str__(self) -> str:
        return f"ρ_{self.n}"


@dataclass(frozen=True)
class Tau:
    g: int
    m: int
    op = 'tau'

    def apply(self, G: Sequence) -> Sequence:
        return tau(G, self.g, self.m)

    def to_dict(self) -> Dict[str, Any]:
        return {'op': self.op, 'g': int_to_json(self.g), 'm': int_to_json(self.m)}

    def __str__(self) -> str:
        return f"τ_{{{self.g},{self.m}}}"


@dataclass(frozen=True)
class Pi:
    n: int
    op = 'pi'

    def apply(self, G: Sequence) -> Sequence:
        return pi(G, self.n)

    def to_dict(self) -> Dict[str, Any]:
        return {'op': self.op, 'n': self.n}

    def __str__(self) -> str:
        return f"π_{self.n}"


@dataclass(frozen=True)
class Swap:
    i: int
    j: int
    op = 'swap'

    def apply(self, G: Sequence) -> Sequence:
        return swap(G, self.i, self.j)

    def to_dict(self) -> Dict[str, Any]:
        return {'op': self.op, 'i': self.i, 'j': self.j}

    def __str__(self) -> str:
        return f"({self.i} {self.j})"


TransformStep = Union[Rho, Tau, Pi, Swap]


def step_from_dict(payload: Any) -> TransformStep:
    """
    解析带标签的 JSON 步骤，例如 {"op":"tau","g":"33","m":"2"}

    Raises:
        InvalidProgram: 未知操作或字段缺失、类型错误
    """
    if not isinstance(payload, dict):
        raise InvalidProgram(f"步骤必须是 JSON 对象: {payload!r}")
    op = payload.get('op')
    fields = {
        'rho': ('n',),
        'tau': ('g', 'm'),
        'pi': ('n',),
        'swap': ('i', 'j'),
    }
    if op not in fields:
        raise InvalidProgram(f"未知的变换操作: {op!r}")
    missing = [name for name in fields[op] if name not in payload]
    if missing:
        raise InvalidProgram(f"{op} 步骤缺少字段: {', '.join(missing)}")
    values = [int_from_json(payload[name], name) for name in fields[op]]
    if op == 'rho':
        return Rho(*values)
    if op == 'tau':
        return Tau(*values)
    if op == 'pi':
        return Pi(*values)
    return Swap(*values)


@dataclass(frozen=True)
class TransformProgram:
    """按顺序作用的变换步骤；source_gcd 为程序适用的源序列 gcd（可选）"""

    steps: Tuple[TransformStep, ...] = ()
    source_gcd: Optional[int] = None

    def __len__(self) -> int:
        return len(self.steps)

    def then(self, other: 'TransformProgram') -> 'TransformProgram':
        return TransformProgram(self.steps + other.steps, self.source_gcd)

    def notation(self) -> str:
        """复合记号，最右侧的步骤最先作用，例如 τ_{33,2}∘ρ_2∘ρ_3"""
        if not self.steps:
            return 'id'
        return '∘'.join(str(step) for step in reversed(self.steps))

    def to_list(self) -> List[Dict[str, Any]]:
        return [step.to_dict() for step in self.steps]

    @classmethod
    def from_list(cls, payload: Any) -> 'TransformProgram':
        """
        接受步骤数组，或 {"source_gcd": …, "steps": […]} 对象

        Raises:
            InvalidProgram: 结构不合法
        """
        source_gcd = None
        if isinstance(payload, dict):
            if 'source_gcd' in payload and payload['source_gcd'] is not None:
                source_gcd = int_from_json(payload['source_gcd'], 'source_gcd')
            payload = payload.get('steps')
        if not isinstance(payload, list):
            raise InvalidProgram("变换程序必须是步骤数组")
        return cls(tuple(step_from_dict(item) for item in payload), source_gcd)


def _run(G: Sequence, program: TransformProgram, keep_trace: bool) -> List[Sequence]:
    if program.source_gcd is not None and G.gcd() != program.source_gcd:
        raise GcdMismatch(f"程序要求源序列 gcd = {program.source_gcd}，实际 {G.gcd()}")
    snapshots = [G]
    current = G
    for position, step in enumerate(program.steps, 1):
        try:
            current = step.apply(current)
        except NumsemiError as e:
            e.step_index = position
            e.message = f"第 {position} 步 {step} 失败: {e.message}"
            e.args = (e.message,)
            raise
        logger.debug(f"第 {position} 步 {step}: {current}")
        if keep_trace:
            snapshots.append(current)
    if not keep_trace:
        snapshots.append(current)
    return snapshots


def apply_program(G: Sequence, program: TransformProgram) -> Sequence:
    """
    从左到右依次执行程序中的步骤

    Raises:
        NumsemiError: 第一个失败步骤的原始错误类型，step_index 为其 1 起始序号
    """
    return _run(G, program, keep_trace=False)[-1]


def trace_program(G: Sequence, program: TransformProgram) -> List[Sequence]:
    """逐步快照：首个为输入，末个为输出"""
    return _run(G, program, keep_trace=True)


def collapse(G: Sequence) -> Tuple[int, TransformProgram]:
    """
    R_G = ρ_2∘ρ_3∘…∘ρ_k，把 G 收缩为 (gcd(G))；对非望远镜序列同样成立

    Raises:
        HeadZero: g_1 = 0
    """
    gcd_profile(G)
    program = TransformProgram(tuple(Rho(n) for n in range(G.k, 1, -1)), G.gcd())
    result = apply_program(G, program)
    return result.terms[0], program


def rebuild(Z: ZDecomposition) -> Tuple[Sequence, TransformProgram]:
    """
    T_G：从 (d) 出发依次作用 τ_{z_2,c_2}, …, τ_{z_k,c_k}

    Raises:
        InvalidDecomposition: z 分解不满足不变量
    """
    Z.validate()
    program = TransformProgram(tuple(Tau(z_i, c_i) for z_i, c_i in zip(Z.z[1:], Z.c)), Z.d)
    return apply_program(Sequence((Z.d,)), program), program


def morph(G: Sequence, H: Sequence) -> TransformProgram:
    """
    φ_{G,H} = T_H∘R_G，作用于 G 得到 H

    Raises:
        NotTelescopic: G 或 H 不是望远镜序列
        GcdMismatch: gcd(G) ≠ gcd(H)
    """
    for label, seq in (('G', G), ('H', H)):
        witness = prefix_witness(seq)
        if witness is not None:
            raise NotTelescopic(f"{label} = {seq} 不是望远镜序列（j={witness}）", index=witness)
    if G.gcd() != H.gcd():
        raise GcdMismatch(f"gcd(G) = {G.gcd()} ≠ gcd(H) = {H.gcd()}")
    _, down = collapse(G)
    _, up = rebuild(z_decompose(H))
    program = down.then(up)
    logger.info(f"φ_{{G,H}} = {program.notation()}")
    return program
