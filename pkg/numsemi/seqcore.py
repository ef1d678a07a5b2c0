#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
序列基础运算模块
gcd 剖面、c(G)、C_{m,n} 乘积、缩放、切片、拼接与置换作用

所有对外接口使用 1 起始下标，序列为不可变值，所有整数均为任意精度。
"""

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from .base import (
    DegenerateHead,
    HeadZero,
    IndexOutOfRange,
    InvalidSequence,
    NotDivisible,
    SizeMismatch,
    ZeroScale,
)


@dataclass(frozen=True)
class Sequence:
    """非负整数的有限有序序列 G=(g_1,…,g_k)，k ≥ 1"""

    terms: Tuple[int, ...]

    def __init__(self, terms: Iterable[int]):
        values = tuple(terms)
        if not values:
            raise InvalidSequence("序列至少需要一项")
        for position, value in enumerate(values, 1):
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidSequence(f"第 {position} 项不是整数: {value!r}", index=position)
            if value < 0:
                raise InvalidSequence(f"第 {position} 项为负数: {value}", index=position)
        object.__setattr__(self, 'terms', values)

    @classmethod
    def of(cls, *terms: int) -> 'Sequence':
        return cls(terms)

    @property
    def k(self) -> int:
        return len(self.terms)

    def term(self, i: int) -> int:
        """取第 i 项（1 起始）"""
        if not 1 <= i <= self.k:
            raise IndexOutOfRange(f"下标 {i} 超出范围 1..{self.k}", index=i)
        return self.terms[i - 1]

    def gcd(self) -> int:
        return math.gcd(*self.terms)

    def to_text(self) -> str:
        return ','.join(str(t) for t in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __str__(self) -> str:
        return self.to_text()


def parse_sequence(text: str) -> Sequence:
    """
    解析规范文本形式，例如 "660,550,352,50,201"

    Raises:
        InvalidSequence: 文本不是逗号分隔的十进制非负整数
    """
    stripped = text.strip()
    if not stripped:
        raise InvalidSequence("空序列文本")
    parts = stripped.split(',')
    values = []
    for position, part in enumerate(parts, 1):
        if not (part.isascii() and part.isdigit()):
            raise InvalidSequence(f"第 {position} 项无法解析: {part!r}", index=position)
        values.append(int(part))
    return Sequence(values)


@dataclass(frozen=True)
class GcdProfile:
    """
    序列的 gcd 剖面

    d[i-1] = gcd(g_1,…,g_i)，c[j-2] = d_{j-1}/d_j（j=2..k）
    """

    d: Tuple[int, ...]
    c: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.d)

    @property
    def gcd_G(self) -> int:
        return self.d[-1]

    def d_at(self, i: int) -> int:
        """d_i（1 起始）"""
        if not 1 <= i <= self.k:
            raise IndexOutOfRange(f"下标 {i} 超出范围 1..{self.k}", index=i)
        return self.d[i - 1]

    def c_at(self, j: int) -> int:
        """c_j（j=2..k）"""
        if not 2 <= j <= self.k:
            raise IndexOutOfRange(f"c 的下标 {j} 超出范围 2..{self.k}", index=j)
        return self.c[j - 2]

    def C(self, m: int, n: int) -> int:
        return c_product(self, m, n)


def gcd_profile(G: Sequence) -> GcdProfile:
    """
    计算 d_i、c_j 与 gcd(G)

    Raises:
        HeadZero: g_1 = 0，需先调用 normalize_head
    """
    if G.terms[0] == 0:
        raise HeadZero("g_1 = 0，请先规范化首项", index=1)
    d = []
    running = 0
    for value in G.terms:
        running = math.gcd(running, value)
        d.append(running)
    c = tuple(d[j - 1] // d[j] for j in range(1, len(d)))
    return GcdProfile(d=tuple(d), c=c)


def c_product(P: GcdProfile, m: int, n: int) -> int:
    """C_{m,n} = ∏_{j=m+1}^{n} c_j，m = n 时为 1"""
    if not 1 <= m <= n <= P.k:
        raise IndexOutOfRange(f"C_{{{m},{n}}} 需要 1 ≤ m ≤ n ≤ {P.k}")
    return math.prod(P.c[m - 1:n - 1])


def scale(G: Sequence, m: int) -> Sequence:
    """mG"""
    if m < 0:
        raise InvalidSequence(f"缩放因子为负数: {m}")
    return Sequence(m * g for g in G.terms)


def divide(G: Sequence, m: int) -> Sequence:
    """
    G/m

    Raises:
        ZeroScale: m = 0
        NotDivisible: 某一项不是 m 的倍数
    """
    if m == 0:
        raise ZeroScale("不能除以 0")
    for position, g in enumerate(G.terms, 1):
        if g % m:
            raise NotDivisible(f"第 {position} 项 {g} 不能被 {m} 整除", index=position)
    return Sequence(g // m for g in G.terms)


def slice_seq(G: Sequence, i: int, j: int) -> Sequence:
    """G_{i,j} = (g_{i+1},…,g_j)，0 ≤ i < j ≤ k"""
    if not 0 <= i < j <= G.k:
        raise IndexOutOfRange(f"切片 G_{{{i},{j}}} 需要 0 ≤ i < j ≤ {G.k}")
    return Sequence(G.terms[i:j])


def prefix(G: Sequence, i: int) -> Sequence:
    """G_i = G_{0,i}"""
    return slice_seq(G, 0, i)


def concat(G: Sequence, H: Sequence) -> Sequence:
    """G×H"""
    return Sequence(G.terms + H.terms)


def remove_term(G: Sequence, n: int) -> Sequence:
    """删除第 n 项，后续项下标依次减一"""
    if G.k < 2 or not 1 <= n <= G.k:
        raise IndexOutOfRange(f"删除第 {n} 项需要 k ≥ 2 且 1 ≤ n ≤ {G.k}", index=n)
    return Sequence(G.terms[:n - 1] + G.terms[n:])


@dataclass(frozen=True)
class Permutation:
    """{1,…,k} 上的置换，以像列表表示：σ(i) = images[i-1]"""

    images: Tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        values = tuple(images)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise SizeMismatch(f"不是 1..{len(values)} 的重排: {values}")
        object.__setattr__(self, 'images', values)

    @classmethod
    def identity(cls, k: int) -> 'Permutation':
        return cls(range(1, k + 1))

    @classmethod
    def transposition(cls, i: int, j: int, k: int) -> 'Permutation':
        """对换 (i j)；i = j 时为恒等置换"""
        if not (1 <= i <= k and 1 <= j <= k):
            raise IndexOutOfRange(f"对换 ({i} {j}) 超出范围 1..{k}")
        images = list(range(1, k + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(images)

    @property
    def k(self) -> int:
        return len(self.images)


def apply_permutation(G: Sequence, sigma: Permutation) -> Sequence:
    """σ(G) = (g_{σ(1)},…,g_{σ(k)})"""
    if sigma.k != G.k:
        raise SizeMismatch(f"置换作用于 {sigma.k} 项，序列有 {G.k} 项")
    return Sequence(G.terms[s - 1] for s in sigma.images)


def swap(G: Sequence, i: int, j: int) -> Sequence:
    return apply_permutation(G, Permutation.transposition(i, j, G.k))


def normalize_head(G: Sequence) -> Sequence:
    """
    保证 g_1 > 0：若 g_1 = 0 则交换前两项

    Raises:
        DegenerateHead: k = 1 且 g_1 = 0，或 g_1 + g_2 = 0
    """
    if G.terms[0] > 0:
        return G
    if G.k == 1 or G.terms[1] == 0:
        raise DegenerateHead("首两项均为 0，无法规范化")
    return swap(G, 1, 2)
