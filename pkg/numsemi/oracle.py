#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
子幺半群暴力判定模块
基于动态规划的成员判定、间隙、Apéry 集、Frobenius 数、亏格、最小生成元

这里的实现刻意保持简单，作为闭式结果的可信参照。
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np

from .base import (
    InfiniteComplement,
    NotAMember,
    SizeCapExceeded,
    SizeMismatch,
    int_to_json,
    ints_to_json,
)
from .config import LIMITS_CONFIG
from .seqcore import Sequence

logger = logging.getLogger("numsemi.oracle")


@dataclass(frozen=True)
class IntPolynomial:
    """整系数多项式，常数项在前"""

    coefficients: Tuple[int, ...]

    def __init__(self, coefficients: Iterable[int]):
        values = tuple(int(a) for a in coefficients)
        object.__setattr__(self, 'coefficients', values or (0,))

    @classmethod
    def monomial(cls, degree: int) -> 'IntPolynomial':
        return cls([0] * degree + [1])

    @classmethod
    def parse(cls, text: str) -> 'IntPolynomial':
        """解析 "0,0,1" 形式（即 n²）"""
        parts = [p.strip() for p in text.split(',')]
        try:
            return cls(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"无法解析多项式系数: {text!r}") from None

    def __call__(self, n: int) -> int:
        result = 0
        for a in reversed(self.coefficients):
            result = result * n + a
        return result

    def __str__(self) -> str:
        return ','.join(str(a) for a in self.coefficients)


@dataclass(frozen=True)
class MonoidSummary:
    """⟨G⟩ 的暴力统计：间隙、Frobenius 数、亏格、嵌入维数，可选 Apéry 集"""

    gaps: Tuple[int, ...]
    frobenius: int
    genus: int
    embedding_dimension: int
    apery: Optional[Dict[int, int]] = field(default=None, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            'gaps': ints_to_json(self.gaps),
            'frobenius': int_to_json(self.frobenius),
            'genus': int_to_json(self.genus),
            'embedding_dimension': self.embedding_dimension,
        }
        if self.apery is not None:
            payload['apery'] = apery_to_json(self.apery)
        return payload


def apery_to_json(apery: Dict[int, int]) -> List[str]:
    """Apéry 集按剩余类下标序列化为数组"""
    return [int_to_json(apery[r]) for r in range(len(apery))]


def _reduced_generators(G: Sequence) -> Tuple[int, List[int]]:
    """返回 gcd(G) 与除去 gcd 后去重排序的正生成元"""
    d = G.gcd()
    if d == 0:
        return 0, []
    return d, sorted({g // d for g in G.terms if g > 0})


def _member_table(generators: List[int], limit: int, cap: Optional[int] = None) -> np.ndarray:
    """
    table[n] 为真当且仅当 n ∈ ⟨generators⟩，0 ≤ n ≤ limit

    每个生成元按 g, 2g, 4g, … 的位移做倍增或运算，等价于无界背包。
    """
    cap = LIMITS_CONFIG['DP_TABLE_CAP'] if cap is None else cap
    size = limit + 1
    if size > cap:
        raise SizeCapExceeded(f"动态规划表长度 {size} 超过上限 {cap}")
    table = np.zeros(size, dtype=bool)
    table[0] = True
    for g in generators:
        if g <= 0 or g > limit:
            continue
        shift = g
        while shift <= limit:
            table[shift:] |= table[:-shift]
            shift *= 2
    return table


def _first_full_run(table: np.ndarray, m: int) -> Optional[int]:
    """第一段 m 个连续成员的起点"""
    if table.size < m:
        return None
    sums = np.concatenate(([0], np.cumsum(table, dtype=np.int64)))
    windows = sums[m:] - sums[:-m]
    hits = np.flatnonzero(windows == m)
    if hits.size == 0:
        return None
    return int(hits[0])


def _scan(generators: List[int], cap: Optional[int] = None,
          reach: Optional[int] = None) -> Tuple[np.ndarray, Optional[int]]:
    """
    从 4·min(generators) 起倍增表长，直至出现 min(generators) 个连续成员

    给出 reach 时，表长覆盖 reach 后即可停止，此时连续段起点可能为 None

    Returns:
        (成员表, 连续段起点)；起点及之后的整数全部属于半群
    """
    m = generators[0]
    limit = max(4 * m, 16)
    while True:
        table = _member_table(generators, limit, cap)
        start = _first_full_run(table, m)
        if start is not None:
            logger.debug(f"扫描完成: 表长 {limit + 1}，连续段起点 {start}")
            return table, start
        if reach is not None and limit >= reach:
            return table, None
        limit *= 2


def _require_numerical(G: Sequence) -> List[int]:
    d, generators = _reduced_generators(G)
    if d != 1:
        raise InfiniteComplement(f"gcd(G) = {d} ≠ 1，补集无限")
    return generators


def contains(G: Sequence, n: int) -> bool:
    """n 是否为 G 的非负整数线性组合"""
    if n < 0:
        return False
    if n == 0:
        return True
    d, generators = _reduced_generators(G)
    if d == 0 or n % d:
        return False
    target = n // d
    if any(target % g == 0 for g in generators):
        return True
    table, start = _scan(generators, reach=target)
    if start is not None and target >= start:
        return True
    return bool(table[target])


def gaps(G: Sequence, apery_modulus: Optional[int] = None) -> MonoidSummary:
    """
    枚举 ⟨G⟩ 的全部间隙

    Args:
        G: gcd 为 1 的序列
        apery_modulus: 若给出则同时计算 Ap(S; t)

    Raises:
        InfiniteComplement: gcd(G) ≠ 1
    """
    generators = _require_numerical(G)
    table, start = _scan(generators)
    gap_values = tuple(int(x) for x in np.flatnonzero(~table[:start]))
    frobenius = gap_values[-1] if gap_values else -1
    apery = apery_bf(G, apery_modulus) if apery_modulus is not None else None
    return MonoidSummary(
        gaps=gap_values,
        frobenius=frobenius,
        genus=len(gap_values),
        embedding_dimension=embedding_dimension(G),
        apery=apery,
    )


def apery_bf(G: Sequence, t: int) -> Dict[int, int]:
    """
    Ap(S; t)：每个模 t 剩余类中的最小成员

    Raises:
        InfiniteComplement: gcd(G) ≠ 1
        NotAMember: t = 0 或 t ∉ ⟨G⟩
    """
    generators = _require_numerical(G)
    if t <= 0 or not contains(G, t):
        raise NotAMember(f"t = {t} 不是 ⟨G⟩ 的非零元素")
    _, start = _scan(generators)
    table = _member_table(generators, max(start, 1) - 1 + t)
    apery = {}
    for r in range(t):
        hits = np.flatnonzero(table[r::t])
        apery[r] = r + int(hits[0]) * t
    return apery


def _check_apery(apery: Dict[int, int], t: int) -> None:
    if t <= 0 or len(apery) != t or set(apery) != set(range(t)):
        raise SizeMismatch(f"Apéry 集应恰有 {t} 个剩余类，实际 {len(apery)}")
    for r, w in apery.items():
        if w % t != r:
            raise SizeMismatch(f"Apéry 元素 {w} 不在剩余类 {r} (mod {t})")


def frobenius_from_apery(apery: Dict[int, int], t: int) -> int:
    """F(S) = max(Ap(S;t)) − t"""
    _check_apery(apery, t)
    return max(apery.values()) - t


def genus_from_apery(apery: Dict[int, int], t: int) -> int:
    """g(S) = (1−t)/2 + (1/t)·Σ Ap(S;t)，精确有理运算"""
    _check_apery(apery, t)
    genus = Fraction(1 - t, 2) + Fraction(sum(apery.values()), t)
    return int(genus)


def minimal_generators(G: Sequence) -> Sequence:
    """
    ⟨G⟩ 的唯一最小生成子序列，保持原有相对顺序

    去掉 0，重复值保留首次出现，再去掉能由其余项生成的项；
    全为 0 时返回 (0)。
    """
    distinct = []
    for g in G.terms:
        if g > 0 and g not in distinct:
            distinct.append(g)
    if not distinct:
        return Sequence((0,))
    kept = []
    for a in distinct:
        others = [b for b in distinct if b != a] or [0]
        if not contains(Sequence(others), a):
            kept.append(a)
    return Sequence(kept)


def embedding_dimension(G: Sequence) -> int:
    """e(⟨G⟩)：最小生成集的大小"""
    minimal = minimal_generators(G)
    return 0 if minimal.terms == (0,) else minimal.k


def is_minimal_bf(G: Sequence) -> bool:
    """不存在 g_n ∈ ⟨π_n(G)⟩；单项序列视为最小"""
    if G.k == 1:
        return True
    for n in range(G.k):
        others = Sequence(G.terms[:n] + G.terms[n + 1:])
        if contains(others, G.terms[n]):
            logger.debug(f"第 {n + 1} 项 {G.terms[n]} 可由其余项生成")
            return False
    return True


def monoids_equal(G: Sequence, H: Sequence) -> bool:
    """⟨G⟩ = ⟨H⟩：gcd 相同，约去 gcd 后在 0..max(F₁,F₂)+1 上比较成员"""
    d_g, gens_g = _reduced_generators(G)
    d_h, gens_h = _reduced_generators(H)
    if d_g != d_h:
        return False
    if d_g == 0:
        return True
    _, start_g = _scan(gens_g)
    _, start_h = _scan(gens_h)
    bound = max(start_g, start_h)
    return bool(np.array_equal(_member_table(gens_g, bound), _member_table(gens_h, bound)))


def tuenter_check(G: Sequence, t: int, f: IntPolynomial) -> Tuple[int, int]:
    """
    一般间隙恒等式的两边

    lhs = Σ_{n ∈ H(S)} [f(n+t) − f(n)]
    rhs = Σ_{w ∈ Ap(S;t)} f(w) − Σ_{n=0}^{t−1} f(n)
    """
    summary = gaps(G)
    apery = apery_bf(G, t)
    lhs = sum(f(n + t) - f(n) for n in summary.gaps)
    rhs = sum(f(w) for w in apery.values()) - sum(f(n) for n in range(t))
    return lhs, rhs


def is_symmetric_bf(G: Sequence) -> bool:
    """F(S) = 2g(S) − 1"""
    summary = gaps(G)
    return summary.frobenius == 2 * summary.genus - 1


