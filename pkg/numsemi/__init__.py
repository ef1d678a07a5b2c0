#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
numsemi 望远镜序列与自由数值半群工具包
包含序列运算、暴力判定、望远镜闭式、变换演算、最小化与构造六个模块
"""

__version__ = "1.0.0"
__author__ = "numsemi"

# 导入各个模块
from .base import NumsemiError
from .seqcore import Sequence, parse_sequence, gcd_profile, normalize_head
from .oracle import contains, gaps, apery_bf, minimal_generators, is_minimal_bf, monoids_equal
from .telescopic import TelescopicSequence, is_telescopic, prefix_witness, telescopic_witness, z_decompose
from .transforms import TransformProgram, rho, tau, pi, collapse, rebuild, morph, apply_program
from .minimize import find_redundancy, minimize_telescopic, telescopic_reorder, is_free
from .construct import ConstructionRequest, build, validate_minimal, family, enumerate_sequences

__all__ = [
    'NumsemiError',
    'Sequence',
    'parse_sequence',
    'gcd_profile',
    'normalize_head',
    'contains',
    'gaps',
    'apery_bf',
    'minimal_generators',
    'is_minimal_bf',
    'monoids_equal',
    'TelescopicSequence',
    'is_telescopic',
    'telescopic_witness',
    'prefix_witness',
    'z_decompose',
    'TransformProgram',
    'rho',
    'tau',
    'pi',
    'collapse',
    'rebuild',
    'morph',
    'apply_program',
    'find_redundancy',
    'minimize_telescopic',
    'telescopic_reorder',
    'is_free',
    'ConstructionRequest',
    'build',
    'validate_minimal',
    'family',
    'enumerate_sequences',
]
