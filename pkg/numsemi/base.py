#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
基础模块
提供统一的异常体系以及大整数的 JSON 编解码工具
"""

from typing import Any, Dict, Iterable, List, Optional, Type


class NumsemiError(Exception):
    """所有领域错误的基类，类名即错误名"""

    def __init__(self, message: str = '', index: Optional[int] = None):
        """
        初始化领域错误

        Args:
            message: 错误说明
            index: 出错位置（1 起始），无则为 None
        """
        super().__init__(message)
        self.message = message
        self.index = index
        self.step_index: Optional[int] = None

    @property
    def name(self) -> str:
        return type(self).__name__

    def to_dict(self) -> Dict[str, Any]:
        """转换为命令行诊断信息"""
        payload: Dict[str, Any] = {'error': self.name, 'message': str(self)}
        if self.index is not None:
            payload['index'] = self.index
        if self.step_index is not None:
            payload['step_index'] = self.step_index
        return payload


# seqcore
class InvalidSequence(NumsemiError):
    pass


class HeadZero(NumsemiError):
    pass


class DegenerateHead(NumsemiError):
    pass


class IndexOutOfRange(NumsemiError):
    pass


class NotDivisible(NumsemiError):
    pass


class ZeroScale(NumsemiError):
    pass


class SizeMismatch(NumsemiError):
    pass


# oracle
class InfiniteComplement(NumsemiError):
    pass


class NotAMember(NumsemiError):
    pass


class SizeCapExceeded(NumsemiError):
    pass


# telescopic
class NotTelescopic(NumsemiError):
    pass


class NotMultipleOfGcd(NumsemiError):
    pass


class NonUnitGcd(NumsemiError):
    pass


# transforms
class ZeroMultiplier(NumsemiError):
    pass


class NotCoprime(NumsemiError):
    pass


class InvalidDecomposition(NumsemiError):
    pass


class GcdMismatch(NumsemiError):
    pass


class InvalidProgram(NumsemiError):
    pass


# minimize
class PreconditionViolated(NumsemiError):
    pass


class MonoidMismatch(NumsemiError):
    pass


class MissingTerm(NumsemiError):
    pass


# construct
class GcdConditionFailed(NumsemiError):
    pass


class MembershipConditionFailed(NumsemiError):
    pass


class MinimalityConditionFailed(NumsemiError):
    pass


class InvalidFamilyParameters(NumsemiError):
    pass


def int_to_json(value: int) -> str:
    """大整数一律以十进制字符串输出，避免 53 位浮点截断"""
    return str(int(value))


def ints_to_json(values: Iterable[int]) -> List[str]:
    return [int_to_json(v) for v in values]


def int_from_json(value: Any, field: str = 'value',
                  error: Type[NumsemiError] = InvalidProgram) -> int:
    """
    解析 JSON 中的整数字段

    接受十进制字符串或 JSON 整数，拒绝布尔值与浮点数；失败时抛出 error
    """
    if isinstance(value, bool):
        raise error(f"字段 {field} 不是整数: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip()
        digits = text[1:] if text.startswith('-') else text
        if digits.isascii() and digits.isdigit():
            return int(text)
    raise error(f"字段 {field} 不是整数: {value!r}")
