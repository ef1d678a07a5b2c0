#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
望远镜序列构造模块
由 (d, c, z) 数据构造望远镜序列，检查最小性条件，
生成几类经典族（几何型、超对称型、复合型），并按界枚举或随机抽样
"""

import logging
import math
import random
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

from .base import (
    GcdConditionFailed,
    InvalidDecomposition,
    InvalidFamilyParameters,
    MembershipConditionFailed,
    NotTelescopic,
    SizeMismatch,
    int_from_json,
    int_to_json,
    ints_to_json,
)
from .config import LIMITS_CONFIG
from .seqcore import Sequence, gcd_profile
from .telescopic import level_violation, prefix_witness

logger = logging.getLogger("numsemi.construct")


@dataclass(frozen=True)
class ConstructionRequest:
    """
    构造请求：d ≥ 1，c = (c_2,…,c_k)，z = (z_2,…,z_k)

    z_1 总是等于 d，不单独给出
    """

    d: int
    c: Tuple[int, ...]
    z: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'c', tuple(self.c))
        object.__setattr__(self, 'z', tuple(self.z))
        if len(self.c) != len(self.z):
            raise SizeMismatch(f"c 有 {len(self.c)} 项，z 有 {len(self.z)} 项")

    @property
    def k(self) -> int:
        return len(self.c) + 1

    @property
    def full_z(self) -> Tuple[int, ...]:
        return (self.d,) + self.z

    def C(self, m: int, n: int) -> int:
        return math.prod(self.c[m - 1:n - 1])

    def to_dict(self) -> Dict[str, Any]:
        return {'d': int_to_json(self.d), 'c': ints_to_json(self.c), 'z': ints_to_json(self.z)}

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> 'ConstructionRequest':
        return cls(
            d=int_from_json(payload['d'], 'd', InvalidDecomposition),
            c=tuple(int_from_json(v, 'c', InvalidDecomposition) for v in payload.get('c', [])),
            z=tuple(int_from_json(v, 'z', InvalidDecomposition) for v in payload.get('z', [])),
        )


@dataclass(frozen=True)
class MinimalityViolation:
    """最小性条件的第一个违反：c_j = 1，或 z_j | z_i·C_{i,j}"""

    j: int
    i: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        if self.i is None:
            return {'kind': 'unit_c', 'j': self.j}
        return {'kind': 'divides', 'i': self.i, 'j': self.j}

    def __str__(self) -> str:
        if self.i is None:
            return f"c_{self.j} = 1"
        return f"z_{self.j} | z_{self.i}·C_{{{self.i},{self.j}}}"


def _divides(a: int, b: int) -> bool:
    return b == 0 if a == 0 else b % a == 0


def _raise_level(kind: str, i: int) -> None:
    if kind == 'gcd':
        raise GcdConditionFailed(f"第 {i} 项不满足 gcd(z_i, d·c_i) = d", index=i)
    raise MembershipConditionFailed(f"第 {i} 项不满足 z_i ∈ ⟨z_j·C_{{j,i−1}}⟩", index=i)


def build(req: ConstructionRequest) -> Sequence:
    """
    按 g_i = z_i·C_{i,k} 构造望远镜序列

    Raises:
        GcdConditionFailed: 第一个不满足 gcd 条件的下标
        MembershipConditionFailed: 第一个不满足成员条件的下标
    """
    if req.d < 1:
        raise GcdConditionFailed(f"d 必须 ≥ 1，实际 {req.d}", index=1)
    z = req.full_z
    for i in range(2, req.k + 1):
        kind = level_violation(req.d, req.c, z, i)
        if kind is not None:
            _raise_level(kind, i)
    G = Sequence(z[i - 1] * req.C(i, req.k) for i in range(1, req.k + 1))
    logger.debug(f"构造完成: d={req.d}, c={req.c}, z={req.z} -> {G}")
    return G


def _level_minimality(req_c: Tuple[int, ...], z: Tuple[int, ...], j: int) -> Optional[MinimalityViolation]:
    if req_c[j - 2] == 1:
        return MinimalityViolation(j)
    for i in range(1, j):
        if _divides(z[j - 1], z[i - 1] * math.prod(req_c[i - 1:j - 1])):
            return MinimalityViolation(j, i)
    return None


def divisibility_violation(req: ConstructionRequest) -> Optional[Tuple[int, int]]:
    """只做 z_j ∤ z_i·C_{i,j} 的扫描，返回第一个 (i, j)"""
    z = req.full_z
    for j in range(2, req.k + 1):
        for i in range(1, j):
            if _divides(z[j - 1], z[i - 1] * req.C(i, j)):
                return i, j
    return None


def validate_minimal(req: ConstructionRequest) -> Tuple[bool, Optional[MinimalityViolation]]:
    """
    构造结果是否最小：所有 c_j > 1 且 z_j ∤ z_i·C_{i,j}（1 ≤ i < j ≤ k）

    Returns:
        (是否最小, 第一个违反项)
    """
    build(req)
    z = req.full_z
    for j in range(2, req.k + 1):
        found = _level_minimality(req.c, z, j)
        if found is not None:
            return False, found
    return True, None


@dataclass(frozen=True)
class Geometric:
    """g_i = a^{k−i}·b^{i−1}"""

    a: int
    b: int
    k: int

    def validate(self) -> None:
        if self.a < 1 or self.b < 1 or self.k < 1:
            raise InvalidFamilyParameters(f"需要 a, b, k ≥ 1: a={self.a}, b={self.b}, k={self.k}")
        if math.gcd(self.a, self.b) != 1:
            raise InvalidFamilyParameters(f"gcd(a, b) = gcd({self.a}, {self.b}) ≠ 1")

    def request(self) -> ConstructionRequest:
        c = (self.a,) * (self.k - 1)
        z = tuple(self.b ** (i - 1) for i in range(2, self.k + 1))
        return ConstructionRequest(1, c, z)

    def closed_form(self) -> Sequence:
        return Sequence(self.a ** (self.k - i) * self.b ** (i - 1) for i in range(1, self.k + 1))

    def to_dict(self) -> Dict[str, Any]:
        return {'geometric': {'a': int_to_json(self.a), 'b': int_to_json(self.b), 'k': self.k}}


@dataclass(frozen=True)
class Supersymmetric:
    """g_i = A/a_i，A = a_1⋯a_k"""

    a: Tuple[int, ...]

    def validate(self) -> None:
        if not self.a or any(x < 1 for x in self.a):
            raise InvalidFamilyParameters(f"需要非空且各项 ≥ 1: {self.a}")
        for i in range(len(self.a)):
            for j in range(i + 1, len(self.a)):
                if math.gcd(self.a[i], self.a[j]) != 1:
                    raise InvalidFamilyParameters(
                        f"gcd(a_{i + 1}, a_{j + 1}) = gcd({self.a[i]}, {self.a[j]}) ≠ 1")

    def request(self) -> ConstructionRequest:
        c = self.a[1:]
        z = tuple(math.prod(self.a[:i - 1]) for i in range(2, len(self.a) + 1))
        return ConstructionRequest(1, c, z)

    def closed_form(self) -> Sequence:
        total = math.prod(self.a)
        return Sequence(total // x for x in self.a)

    def to_dict(self) -> Dict[str, Any]:
        return {'supersymmetric': ints_to_json(self.a)}


@dataclass(frozen=True)
class Compound:
    """g_i = b_1⋯b_{i−1}·a_i⋯a_{k−1}"""

    a: Tuple[int, ...]
    b: Tuple[int, ...]

    def validate(self) -> None:
        if len(self.a) != len(self.b):
            raise InvalidFamilyParameters(f"a 与 b 长度不同: {len(self.a)} ≠ {len(self.b)}")
        if any(x < 1 for x in self.a + self.b):
            raise InvalidFamilyParameters(f"参数必须 ≥ 1: a={self.a}, b={self.b}")
        for i in range(len(self.a)):
            for j in range(i + 1):
                if math.gcd(self.a[i], self.b[j]) != 1:
                    raise InvalidFamilyParameters(
                        f"gcd(a_{i + 1}, b_{j + 1}) = gcd({self.a[i]}, {self.b[j]}) ≠ 1")

    def request(self) -> ConstructionRequest:
        z = tuple(math.prod(self.b[:i - 1]) for i in range(2, len(self.a) + 2))
        return ConstructionRequest(1, self.a, z)

    def closed_form(self) -> Sequence:
        k = len(self.a) + 1
        return Sequence(
            math.prod(self.b[:i - 1]) * math.prod(self.a[i - 1:]) for i in range(1, k + 1))

    def to_dict(self) -> Dict[str, Any]:
        return {'compound': {'a': ints_to_json(self.a), 'b': ints_to_json(self.b)}}


FamilySpec = Union[Geometric, Supersymmetric, Compound]


def family_spec_from_dict(payload: Dict[str, Any]) -> FamilySpec:
    """
    解析 {"geometric":{"a":…,"b":…,"k":…}}、{"supersymmetric":[…]}、
    {"compound":{"a":[…],"b":[…]}}

    Raises:
        InvalidFamilyParameters: 未知族或字段缺失
    """
    def number(value: Any, field: str) -> int:
        return int_from_json(value, field, InvalidFamilyParameters)

    try:
        if 'geometric' in payload:
            body = payload['geometric']
            return Geometric(number(body['a'], 'a'), number(body['b'], 'b'), number(body['k'], 'k'))
        if 'supersymmetric' in payload:
            return Supersymmetric(tuple(number(v, 'a') for v in payload['supersymmetric']))
        if 'compound' in payload:
            body = payload['compound']
            return Compound(tuple(number(v, 'a') for v in body['a']),
                            tuple(number(v, 'b') for v in body['b']))
    except (KeyError, TypeError) as e:
        raise InvalidFamilyParameters(f"族参数不完整: {e}") from e
    raise InvalidFamilyParameters(f"未知的族: {sorted(payload)}")


def family_request(spec: FamilySpec) -> ConstructionRequest:
    spec.validate()
    return spec.request()


def family(spec: FamilySpec) -> Sequence:
    """
    生成族序列，并核对 c 序列与闭式一致

    Raises:
        InvalidFamilyParameters: 互素条件不成立，指明具体的一对参数
    """
    req = family_request(spec)
    G = build(req)
    if gcd_profile(G).c != req.c or G != spec.closed_form():
        raise InvalidFamilyParameters(f"{spec} 的构造结果 {G} 与闭式不符")
    return G


def check_nondecreasing_minimal(G: Sequence) -> bool:
    """
    非减且所有 c_j > 1 时返回 True（此时 G 必为最小）；否则不作结论

    Raises:
        NotTelescopic: G 不是望远镜序列
    """
    witness = prefix_witness(G)
    if witness is not None:
        raise NotTelescopic(f"{G} 不是望远镜序列（j={witness}）", index=witness)
    nondecreasing = all(a <= b for a, b in zip(G.terms, G.terms[1:]))
    return nondecreasing and all(c_j > 1 for c_j in gcd_profile(G).c)


def _candidates(d: int, c: Tuple[int, ...], z: List[int], z_bound: int,
                minimal_only: bool) -> Iterator[int]:
    """第 len(z)+1 层的合法取值，按升序；先查 gcd，再查成员，最后查整除"""
    i = len(z) + 1
    c_i = c[i - 2]
    for value in range(d, z_bound + 1):
        if math.gcd(value, d * c_i) != d:
            continue
        full = tuple(z) + (value,)
        if level_violation(d, c, full, i) is not None:
            continue
        if minimal_only and _level_minimality(c, full, i) is not None:
            continue
        yield value


def enumerate_sequences(d: int, c: Tuple[int, ...], z_bound: int,
                        minimal_only: bool = False) -> Iterator[Sequence]:
    """
    按 z 的字典序产出所有满足条件的构造结果，d ≤ z_i ≤ z_bound

    minimal_only 时只产出最小序列；任何 c_j = 1 都使结果为空
    """
    c = tuple(c)
    if d < 1 or any(c_j < 1 for c_j in c):
        return
    if minimal_only and any(c_j == 1 for c_j in c):
        return
    k = len(c) + 1

    def walk(z: List[int]) -> Iterator[Sequence]:
        if len(z) == k:
            yield Sequence(z[i - 1] * math.prod(c[i - 1:]) for i in range(1, k + 1))
            return
        for value in _candidates(d, c, z, z_bound, minimal_only):
            yield from walk(z + [value])

    yield from walk([d])


def sample_request(rng: random.Random, d: int, c: Tuple[int, ...], z_bound: int,
                   minimal_only: bool = False,
                   attempts: Optional[int] = None) -> Optional[ConstructionRequest]:
    """
    逐层在合法候选中均匀抽取 z_i；某层无候选时整体重试

    Returns:
        合法的构造请求；重试次数用尽时为 None
    """
    c = tuple(c)
    attempts = LIMITS_CONFIG['SAMPLE_ATTEMPTS'] if attempts is None else attempts
    for _ in range(attempts):
        z = [d]
        for _level in range(len(c)):
            options = list(_candidates(d, c, z, z_bound, minimal_only))
            if not options:
                break
            z.append(rng.choice(options))
        else:
            return ConstructionRequest(d, c, tuple(z[1:]))
    logger.warning(f"{attempts} 次尝试后仍未抽到合法请求: d={d}, c={c}, z_bound={z_bound}")
    return None
