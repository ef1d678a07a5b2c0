#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
望远镜序列最小化模块
按两种冗余情形逐项删除，得到生成同一子幺半群的最小望远镜序列；
并提供把任意生成序列重排为望远镜序列的方法与自由半群判定
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from .base import (
    MissingTerm,
    MonoidMismatch,
    NotTelescopic,
    PreconditionViolated,
    SizeCapExceeded,
    ints_to_json,
)
from .config import LIMITS_CONFIG
from .oracle import minimal_generators, monoids_equal
from .seqcore import Sequence, gcd_profile, prefix, remove_term, swap
from .telescopic import prefix_witness, semigroup_contains

logger = logging.getLogger("numsemi.minimize")

CASE1 = 'Case1'
CASE2 = 'Case2'


@dataclass(frozen=True)
class RedundancyWitness:
    """
    冗余证据

    Case1：c_n = 1 且 g_n ∈ ⟨G_{n−1}⟩
    Case2：m > n 且 g_n = c_m·g_m
    """

    case: str
    n: int
    m: Optional[int] = None

    def __str__(self) -> str:
        if self.case == CASE1:
            return f"{CASE1}(n={self.n})"
        return f"{CASE2}(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class ReductionStep:
    before: Sequence
    witness: RedundancyWitness
    after: Sequence

    def to_dict(self) -> Dict[str, Any]:
        return {
            'before': ints_to_json(self.before.terms),
            'case': '1' if self.witness.case == CASE1 else '2',
            'n': self.witness.n,
            'm': self.witness.m,
            'after': ints_to_json(self.after.terms),
        }


@dataclass(frozen=True)
class ReductionTrace:
    steps: Tuple[ReductionStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def to_list(self) -> List[Dict[str, Any]]:
        return [step.to_dict() for step in self.steps]


def _require_telescopic(G: Sequence) -> None:
    witness = prefix_witness(G)
    if witness is not None:
        raise NotTelescopic(f"{G} 不是望远镜序列（j={witness}）", index=witness)


def find_redundancy(G: Sequence) -> Optional[RedundancyWitness]:
    """
    按 g_i 与 h_j = c_j·g_j 的取值匹配查找冗余项，先取最小 i，再取最小 j

    返回 None 当且仅当 G 是最小序列

    Raises:
        NotTelescopic: G 不是望远镜序列
    """
    _require_telescopic(G)
    profile = gcd_profile(G)
    terms = G.terms
    h = {j: profile.c_at(j) * G.term(j) for j in range(2, G.k + 1)}
    for i in range(1, G.k + 1):
        if i >= 2 and profile.c_at(i) == 1:
            return RedundancyWitness(CASE1, i)
        for j in range(i + 1, G.k + 1):
            if terms[i - 1] == h[j]:
                return RedundancyWitness(CASE2, i, j)
    return None


def remove_case1(G: Sequence, n: int) -> Sequence:
    """
    情形一：c_n = 1 且 g_n ∈ ⟨G_{n−1}⟩ 时返回 π_n(G)

    Raises:
        PreconditionViolated: 前提不成立
    """
    if not 2 <= n <= G.k:
        raise PreconditionViolated(f"情形一需要 2 ≤ n ≤ {G.k}", index=n)
    if gcd_profile(G).c_at(n) != 1:
        raise PreconditionViolated(f"c_{n} ≠ 1", index=n)
    if not semigroup_contains(prefix(G, n - 1), G.term(n)):
        raise PreconditionViolated(f"g_{n} = {G.term(n)} ∉ ⟨G_{n - 1}⟩", index=n)
    return remove_term(G, n)


def remove_case2(G: Sequence, n: int, m: int) -> Sequence:
    """
    情形二：g_n = c_m·g_m（m > n）时返回 π_m((n m)(G))

    n = 1 时先交换前两项，再按 n = 2 处理

    Raises:
        PreconditionViolated: 前提不成立
    """
    if not 1 <= n < m <= G.k:
        raise PreconditionViolated(f"情形二需要 1 ≤ n < m ≤ {G.k}", index=n)
    if G.term(n) != gcd_profile(G).c_at(m) * G.term(m):
        raise PreconditionViolated(f"g_{n} ≠ c_{m}·g_{m}", index=n)
    if n == 1:
        if G.term(2) == 0:
            raise PreconditionViolated("n = 1 时需要 g_2 > 0", index=2)
        G = swap(G, 1, 2)
        n = 2
    return remove_term(swap(G, n, m), m)


def minimize_telescopic(G: Sequence) -> Tuple[Sequence, ReductionTrace]:
    """
    反复删除冗余项直至最小，少于 k 步终止

    Raises:
        NotTelescopic: G 不是望远镜序列
    """
    current = G
    steps = []
    witness = find_redundancy(current)
    while witness is not None:
        if witness.case == CASE2 and witness.n == 1 and current.term(2) == 0:
            # g_2 = 0 时 c_2 = 1，先按情形一删去 g_2
            witness = RedundancyWitness(CASE1, 2)
        if witness.case == CASE1:
            reduced = remove_case1(current, witness.n)
        else:
            reduced = remove_case2(current, witness.n, witness.m)
        logger.debug(f"{current} --{witness}--> {reduced}")
        steps.append(ReductionStep(current, witness, reduced))
        current = reduced
        witness = find_redundancy(current)
    logger.info(f"{G} 经 {len(steps)} 步化为最小望远镜序列 {current}")
    return current, ReductionTrace(tuple(steps))


def is_minimal_telescopic(G: Sequence) -> bool:
    return find_redundancy(G) is None


def telescopic_reorder(H: Sequence, G: Sequence) -> Sequence:
    """
    ⟨H⟩ = ⟨G⟩ 且 G 望远镜时，把 H 重排为望远镜序列

    先放最小望远镜序列 G' 的各项（按值匹配首次出现），其余项保持原顺序

    Raises:
        MonoidMismatch: ⟨H⟩ ≠ ⟨G⟩
        MissingTerm: G' 的某项不在 H 中
    """
    if not monoids_equal(H, G):
        raise MonoidMismatch(f"⟨{H}⟩ ≠ ⟨{G}⟩")
    minimal, _ = minimize_telescopic(G)
    used = set()
    order = []
    for value in minimal.terms:
        position = next(
            (p for p, h in enumerate(H.terms) if h == value and p not in used), None)
        if position is None:
            raise MissingTerm(f"{value} 不在 {H} 中")
        used.add(position)
        order.append(position)
    order.extend(p for p in range(H.k) if p not in used)
    return Sequence(H.terms[p] for p in order)


def _extend_telescopic(chosen: List[int], rest: List[int]) -> Optional[List[int]]:
    """深度优先：望远镜条件只依赖前缀，失败即剪枝"""
    if not rest:
        return chosen
    for position, value in enumerate(rest):
        candidate = chosen + [value]
        if prefix_witness(Sequence(candidate)) is not None:
            continue
        found = _extend_telescopic(candidate, rest[:position] + rest[position + 1:])
        if found is not None:
            return found
    return None


def find_telescopic_permutation(G: Sequence, cap: Optional[int] = None) -> Optional[Sequence]:
    """
    在 ⟨G⟩ 的最小生成元的排列中寻找望远镜序列

    G 的某个排列是望远镜序列，当且仅当其最小生成元的某个排列是

    Raises:
        SizeCapExceeded: 最小生成元个数超过上限
    """
    cap = LIMITS_CONFIG['PERMUTATION_SEARCH_MAX_TERMS'] if cap is None else cap
    minimal = minimal_generators(G)
    if minimal.terms == (0,):
        return minimal
    if minimal.k > cap:
        raise SizeCapExceeded(f"最小生成元有 {minimal.k} 个，超过排列搜索上限 {cap}")
    values = list(minimal.terms)
    for position, head in enumerate(values):
        found = _extend_telescopic([head], values[:position] + values[position + 1:])
        if found is not None:
            return Sequence(found)
    return None


def is_free(G: Sequence, cap: Optional[int] = None) -> bool:
    """⟨G⟩ 是否为自由数值半群"""
    if G.gcd() != 1:
        return False
    return find_telescopic_permutation(G, cap) is not None
