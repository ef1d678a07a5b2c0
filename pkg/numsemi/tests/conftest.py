#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""pytest 共享夹具"""

import pytest

from numsemi.cli import setup_logging
from numsemi.tests.corpus import random_sequences, telescopic_corpus


@pytest.fixture(scope='session')
def free_corpus():
    """500 条 gcd 为 1 的望远镜序列，k ≤ 5，c_j ≤ 6，z_i ≤ 50"""
    return telescopic_corpus(500)


@pytest.fixture(scope='session')
def mixed_gcd_corpus():
    """500 条 gcd 在 1..4 之间的望远镜序列"""
    return telescopic_corpus(500, seed=7, d=None, z_bound=40)


@pytest.fixture(scope='session')
def minimal_corpus():
    """按最小性条件构造的 gcd 为 1 的望远镜序列"""
    return telescopic_corpus(150, seed=11, minimal_only=True, c_min=2, k_max=4)


@pytest.fixture(scope='session')
def random_corpus():
    """400 条任意正整数序列，k ≤ 5，g_i ≤ 60"""
    return random_sequences(400)


@pytest.fixture(autouse=True)
def quiet_logging():
    setup_logging('WARNING')
    yield
