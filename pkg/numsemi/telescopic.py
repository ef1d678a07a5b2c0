#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
望远镜序列模块
望远镜性判定、z 分解、唯一表示与快速成员判定，
以及自由半群的 Apéry 集、Frobenius 数、亏格与间隙恒等式闭式
"""

import logging
import math
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, Optional, Tuple

from .base import (
    InvalidDecomposition,
    NonUnitGcd,
    NotMultipleOfGcd,
    NotTelescopic,
    SizeCapExceeded,
    SizeMismatch,
    int_from_json,
    int_to_json,
    ints_to_json,
)
from .config import LIMITS_CONFIG
from .oracle import IntPolynomial, contains, gaps
from .seqcore import GcdProfile, Sequence, gcd_profile, prefix

logger = logging.getLogger("numsemi.telescopic")


def _inverses(terms: Tuple[int, ...], profile: GcdProfile) -> Tuple[int, ...]:
    """(g_j/d_j)^{-1} mod c_j，c_j = 1 时取 0；gcd(g_j/d_j, c_j) = 1 对任意序列成立"""
    return tuple(
        pow(terms[j - 1] // profile.d[j - 1], -1, c_j) if c_j > 1 else 0
        for j, c_j in zip(range(2, len(terms) + 1), profile.c)
    )


def _unique_representation(
    terms: Tuple[int, ...],
    profile: GcdProfile,
    inverses: Tuple[int, ...],
    length: int,
    n: int,
) -> Tuple[int, Tuple[int, ...]]:
    """
    前 length 项上的唯一表示 n = n_1·g_1 + Σ n_j·g_j，0 ≤ n_j < c_j

    n 必须是 d_length 的倍数；前缀为望远镜序列时 n 属于半群当且仅当 n_1 ≥ 0
    """
    coeffs = [0] * (length - 1)
    remaining = n
    for j in range(length, 1, -1):
        c_j = profile.c[j - 2]
        if c_j > 1:
            n_j = (remaining // profile.d[j - 1]) * inverses[j - 2] % c_j
            coeffs[j - 2] = n_j
            remaining -= n_j * terms[j - 1]
    return remaining // terms[0], tuple(coeffs)


def prefix_witness(G: Sequence) -> Optional[int]:
    """
    与 telescopic_witness 结果相同，但不建动态规划表

    逐个前缀检查 c_j·g_j ∈ ⟨G_{j−1}⟩：已通过检查的前缀是望远镜序列，
    成员关系由唯一表示的 n_1 ≥ 0 判定

    Raises:
        HeadZero: g_1 = 0
    """
    profile = gcd_profile(G)
    terms = G.terms
    inverses = _inverses(terms, profile)
    for j in range(2, G.k + 1):
        target = profile.c[j - 2] * terms[j - 1]
        n1, _ = _unique_representation(terms, profile, inverses, j - 1, target)
        if n1 < 0:
            logger.debug(f"{G} 在 j={j} 处不满足望远镜条件")
            return j
    return None


def level_violation(d: int, c: Tuple[int, ...], z: Tuple[int, ...], i: int) -> Optional[str]:
    """
    第 i 项（i ≥ 2）的条件检查，只用到 z_1..z_i 与 c_2..c_i；要求前 i−1 项已通过检查

    Returns:
        'gcd'：gcd(z_i, d·c_i) ≠ d；'membership'：z_i ∉ ⟨z_j·C_{j,i−1} : j < i⟩；满足时为 None
    """
    c_i, z_i = c[i - 2], z[i - 1]
    if c_i < 1 or math.gcd(z_i, d * c_i) != d:
        return 'gcd'
    # z_i 是 d 的倍数，前 i−1 层构造出的序列是望远镜序列
    generators = Sequence(z[j - 1] * math.prod(c[j - 1:i - 2]) for j in range(1, i))
    profile = gcd_profile(generators)
    n1, _ = _unique_representation(
        generators.terms, profile, _inverses(generators.terms, profile), i - 1, z_i
    )
    if n1 < 0:
        return 'membership'
    return None


def decomposition_violation(d: int, c: Tuple[int, ...], z: Tuple[int, ...]) -> Optional[Tuple[str, int]]:
    """
    检查 (d, c, z) 是否满足望远镜刻画的三个条件

    Args:
        d: gcd，必须 ≥ 1
        c: (c_2,…,c_k)
        z: (z_1,…,z_k)，z_1 应等于 d

    Returns:
        第一个违反条件的 (类别, 下标)，类别为 'head' / 'gcd' / 'membership'；全部满足时为 None
    """
    if len(z) != len(c) + 1:
        raise SizeMismatch(f"z 应有 {len(c) + 1} 项，实际 {len(z)} 项")
    if d < 1 or z[0] != d:
        return 'head', 1
    for i in range(2, len(z) + 1):
        kind = level_violation(d, c, z, i)
        if kind is not None:
            return kind, i
    return None


@dataclass(frozen=True)
class ZDecomposition:
    """望远镜序列的 (d, c, z) 刻画：g_i = z_i·C_{i,k}"""

    d: int
    c: Tuple[int, ...]
    z: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.z)

    def C(self, m: int, n: int) -> int:
        return math.prod(self.c[m - 1:n - 1])

    def violation(self) -> Optional[Tuple[str, int]]:
        return decomposition_violation(self.d, self.c, self.z)

    def validate(self) -> None:
        """
        Raises:
            InvalidDecomposition: 任一不变量不成立
        """
        try:
            found = self.violation()
        except SizeMismatch as e:
            raise InvalidDecomposition(str(e)) from e
        if found is not None:
            kind, index = found
            raise InvalidDecomposition(f"z 分解在第 {index} 项不满足 {kind} 条件", index=index)

    def sequence(self) -> Sequence:
        return Sequence(self.z[i - 1] * self.C(i, self.k) for i in range(1, self.k + 1))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'd': int_to_json(self.d),
            'c': ints_to_json(self.c),
            'z': ints_to_json(self.z),
        }

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> 'ZDecomposition':
        return cls(
            d=int_from_json(payload['d'], 'd', InvalidDecomposition),
            c=tuple(int_from_json(v, 'c', InvalidDecomposition) for v in payload['c']),
            z=tuple(int_from_json(v, 'z', InvalidDecomposition) for v in payload['z']),
        )


@dataclass(frozen=True)
class Representation:
    """n = n1·g_1 + Σ coeffs[j]·g_j，0 ≤ coeffs[j] < c_j"""

    n1: int
    coeffs: Tuple[int, ...]
    value: int

    def to_dict(self) -> Dict[str, Any]:
        return {'n1': int_to_json(self.n1), 'coeffs': ints_to_json(self.coeffs)}


def telescopic_witness(G: Sequence) -> Optional[int]:
    """
    最小的 j 使 c_j·g_j ∉ ⟨G_{j−1}⟩；望远镜序列返回 None

    成员关系用动态规划暴力判定，与 prefix_witness 互相校验

    Raises:
        HeadZero: g_1 = 0
        SizeCapExceeded: 动态规划表超过上限
    """
    profile = gcd_profile(G)
    for j in range(2, G.k + 1):
        target = profile.c_at(j) * G.term(j)
        if not contains(prefix(G, j - 1), target):
            logger.debug(f"{G} 在 j={j} 处不满足望远镜条件")
            return j
    return None


def is_telescopic(G: Sequence) -> bool:
    return telescopic_witness(G) is None


class TelescopicSequence:
    """已验证的望远镜序列，剖面与 z 分解只计算一次"""

    def __init__(self, G: Sequence):
        """
        Raises:
            HeadZero: g_1 = 0
            NotTelescopic: 存在违反条件的下标
        """
        witness = prefix_witness(G)
        if witness is not None:
            raise NotTelescopic(f"{G} 不是望远镜序列（j={witness}）", index=witness)
        self.sequence = G
        self.profile = gcd_profile(G)
        k = G.k
        z = tuple(G.term(i) // self.profile.C(i, k) for i in range(1, k + 1))
        self.decomposition = ZDecomposition(d=self.profile.gcd_G, c=self.profile.c, z=z)
        self._inverses = _inverses(G.terms, self.profile)

    @property
    def gcd(self) -> int:
        return self.profile.gcd_G

    def represent(self, n: int) -> Representation:
        """
        唯一表示：从 j = k 向下逐项求 n_j

        Raises:
            NotMultipleOfGcd: n 不是 gcd(G) 的倍数
        """
        if n % self.gcd:
            raise NotMultipleOfGcd(f"{n} 不是 gcd(G) = {self.gcd} 的倍数")
        n1, coeffs = _unique_representation(
            self.sequence.terms, self.profile, self._inverses, self.sequence.k, n
        )
        return Representation(n1=n1, coeffs=coeffs, value=n)

    def contains(self, n: int) -> bool:
        if n % self.gcd:
            return False
        return self.represent(n).n1 >= 0

    def _require_unit_gcd(self) -> None:
        if self.gcd != 1:
            raise NonUnitGcd(f"gcd(G) = {self.gcd} ≠ 1")

    def apery(self, cap: Optional[int] = None) -> Dict[int, int]:
        """
        Ap(S; g_1) = {Σ_{j≥2} n_j g_j : 0 ≤ n_j < c_j}，按模 g_1 的剩余类索引

        Raises:
            NonUnitGcd: gcd(G) ≠ 1
            SizeCapExceeded: g_1 超过上限
        """
        self._require_unit_gcd()
        cap = LIMITS_CONFIG['APERY_SIZE_CAP'] if cap is None else cap
        g1 = self.sequence.terms[0]
        if g1 > cap:
            raise SizeCapExceeded(f"Apéry 集大小 {g1} 超过上限 {cap}")
        values = [0]
        for c_j, g_j in zip(self.profile.c, self.sequence.terms[1:]):
            values = [v + a * g_j for v in values for a in range(c_j)]
        return {v % g1: v for v in values}

    def frobenius(self) -> int:
        """F(S) = −g_1 + Σ_{j=2}^{k} (c_j − 1)·g_j"""
        self._require_unit_gcd()
        terms = self.sequence.terms
        return -terms[0] + sum((c_j - 1) * g_j for c_j, g_j in zip(self.profile.c, terms[1:]))

    def genus(self) -> int:
        """对称性：g(S) = (1 + F(S))/2"""
        return (1 + self.frobenius()) // 2

    def gap_identity(self, f: IntPolynomial, cap: Optional[int] = None) -> Tuple[int, int]:
        """
        自由半群的显式间隙恒等式

        左边用暴力间隙表，右边直接对系数盒子 0 ≤ n_j < c_j 求嵌套和
        """
        self._require_unit_gcd()
        cap = LIMITS_CONFIG['IDENTITY_BOX_CAP'] if cap is None else cap
        terms = self.sequence.terms
        g1 = terms[0]
        if g1 > cap:
            raise SizeCapExceeded(f"求和盒子大小 {g1} 超过上限 {cap}")
        lhs = sum(f(n + g1) - f(n) for n in gaps(self.sequence).gaps)
        box = product(*(range(c_j) for c_j in self.profile.c))
        rhs = sum(f(sum(a * g for a, g in zip(coeffs, terms[1:]))) for coeffs in box)
        rhs -= sum(f(n) for n in range(g1))
        return lhs, rhs


def z_decompose(G: Sequence) -> ZDecomposition:
    return TelescopicSequence(G).decomposition


def represent(G: Sequence, n: int) -> Representation:
    return TelescopicSequence(G).represent(n)


def contains_fast(G: Sequence, n: int) -> bool:
    return TelescopicSequence(G).contains(n)


def apery_closed(G: Sequence, cap: Optional[int] = None) -> Dict[int, int]:
    return TelescopicSequence(G).apery(cap)


def frobenius_closed(G: Sequence) -> int:
    return TelescopicSequence(G).frobenius()


def genus_closed(G: Sequence) -> int:
    return TelescopicSequence(G).genus()


def gap_identity_check(G: Sequence, f: IntPolynomial) -> Tuple[int, int]:
    return TelescopicSequence(G).gap_identity(f)


def semigroup_contains(G: Sequence, n: int) -> bool:
    """n ∈ ⟨G⟩；G 是望远镜序列时用唯一表示，否则用动态规划"""
    if G.terms[0] == 0 or prefix_witness(G) is not None:
        return contains(G, n)
    return TelescopicSequence(G).contains(n)
