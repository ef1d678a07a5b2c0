#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""最小化测试：两种冗余情形、判据与暴力结果一致、重排与自由判定"""

import itertools
import random

import pytest

from numsemi.base import MonoidMismatch, NotTelescopic, PreconditionViolated, SizeCapExceeded
from numsemi.construct import build
from numsemi.minimize import (
    CASE1,
    CASE2,
    RedundancyWitness,
    find_redundancy,
    find_telescopic_permutation,
    is_free,
    is_minimal_telescopic,
    minimize_telescopic,
    remove_case1,
    remove_case2,
    telescopic_reorder,
)
from numsemi.oracle import contains, is_minimal_bf, monoids_equal
from numsemi.seqcore import Sequence, gcd_profile, prefix
from numsemi.telescopic import is_telescopic
from numsemi.tests.corpus import LARGE_P, LARGE_Q, large_telescopic, random_request

EX_G = Sequence.of(660, 550, 352, 50, 201)
EX_G6 = Sequence.of(660, 550, 352, 902, 50, 201)
EX_MIN = Sequence.of(660, 50, 352, 201)


def test_find_redundancy_examples():
    assert find_redundancy(EX_G) == RedundancyWitness(CASE2, 2, 4)
    assert find_redundancy(EX_MIN) is None
    assert find_redundancy(EX_G6) == RedundancyWitness(CASE2, 2, 5)
    assert find_redundancy(Sequence.of(2, 3, 5)) == RedundancyWitness(CASE1, 3)
    with pytest.raises(NotTelescopic):
        find_redundancy(Sequence.of(3, 4, 5))


def test_remove_case1():
    assert remove_case1(EX_G6, 4).terms == (660, 550, 352, 50, 201)
    assert remove_case1(Sequence.of(2, 3, 5), 3).terms == (2, 3)
    with pytest.raises(PreconditionViolated):
        remove_case1(Sequence.of(4, 6, 5), 3)
    with pytest.raises(PreconditionViolated):
        remove_case1(EX_G6, 1)


def test_remove_case2():
    assert remove_case2(EX_G6, 2, 5).terms == (660, 50, 352, 902, 201)
    assert remove_case2(EX_G, 2, 4).terms == (660, 50, 352, 201)
    assert remove_case2(Sequence.of(6, 3), 1, 2).terms == (3,)
    with pytest.raises(PreconditionViolated):
        remove_case2(EX_G, 2, 3)
    with pytest.raises(PreconditionViolated):
        remove_case2(EX_G, 4, 2)


def test_minimize_examples():
    result, trace = minimize_telescopic(EX_G6)
    assert result == EX_MIN
    assert len(trace) == 2
    allowed = {Sequence.of(660, 550, 352, 50, 201), Sequence.of(660, 50, 352, 902, 201)}
    assert trace.steps[0].after in allowed
    assert trace.steps[0].after == trace.steps[1].before
    for step in trace.steps:
        assert monoids_equal(step.before, step.after)

    result, trace = minimize_telescopic(EX_MIN)
    assert result == EX_MIN
    assert len(trace) == 0

    result, trace = minimize_telescopic(Sequence.of(360, 120, 60, 12, 4))
    assert result == Sequence.of(4)
    assert len(trace) == 4
    assert monoids_equal(result, Sequence.of(360, 120, 60, 12, 4))


def test_trace_json():
    _, trace = minimize_telescopic(EX_G6)
    payload = trace.to_list()
    assert payload[0] == {
        'before': ['660', '550', '352', '902', '50', '201'],
        'case': '2',
        'n': 2,
        'm': 5,
        'after': ['660', '50', '352', '902', '201'],
    }
    assert payload[1]['case'] == '1'
    assert payload[1]['m'] is None


def test_minimize_with_zero_second_term():
    result, trace = minimize_telescopic(Sequence.of(6, 0, 3))
    assert result == Sequence.of(3)
    assert monoids_equal(result, Sequence.of(6, 0, 3))
    assert len(trace) == 2


def test_is_minimal_telescopic():
    assert is_minimal_telescopic(Sequence.of(120, 180, 100, 55, 22))
    assert not is_minimal_telescopic(EX_G)
    assert is_minimal_telescopic(Sequence.of(1))


def test_telescopic_reorder():
    H = Sequence.of(660, 352, 50, 201)
    assert telescopic_reorder(H, EX_G) == EX_MIN
    assert telescopic_reorder(EX_MIN, EX_MIN) == EX_MIN
    reordered = telescopic_reorder(Sequence.of(50, 660, 352, 201, 902), EX_G6)
    assert reordered == Sequence.of(660, 50, 352, 201, 902)
    assert is_telescopic(reordered)
    assert gcd_profile(reordered).c[-1] == 1


def test_telescopic_reorder_errors():
    with pytest.raises(MonoidMismatch):
        telescopic_reorder(Sequence.of(2, 5), Sequence.of(2, 3))
    with pytest.raises(NotTelescopic):
        telescopic_reorder(Sequence.of(5, 4, 3), Sequence.of(3, 4, 5))


def test_find_telescopic_permutation():
    found = find_telescopic_permutation(EX_G)
    assert found is not None
    assert is_telescopic(found)
    assert sorted(found.terms) == sorted((660, 352, 50, 201))
    assert find_telescopic_permutation(Sequence.of(3, 4, 5)) is None
    assert is_free(Sequence.of(9, 6, 4))
    assert not is_free(Sequence.of(5, 4, 3))
    assert not is_free(Sequence.of(4, 6))
    with pytest.raises(SizeCapExceeded):
        find_telescopic_permutation(Sequence.of(11, 13, 14, 15, 16, 17, 19, 20, 21), cap=8)


@pytest.fixture(scope='module')
def reduction_corpus():
    """半数序列按最小性条件构造，半数任意（多含 c_j = 1 或整除关系）"""
    rng = random.Random(2718)
    corpus = []
    for index in range(500):
        if index % 2:
            req = random_request(rng, k_max=5, c_max=5, z_bound=40)
        else:
            req = random_request(rng, k_max=4, c_max=5, z_bound=40, minimal_only=True, c_min=2)
        corpus.append(build(req))
    return corpus


def test_criterion_matches_brute_force(reduction_corpus):
    assert any(not is_minimal_bf(G) for G in reduction_corpus)
    for G in reduction_corpus:
        assert is_minimal_telescopic(G) == is_minimal_bf(G), G


def test_minimize_soundness(reduction_corpus):
    for G in reduction_corpus:
        result, trace = minimize_telescopic(G)
        assert len(trace) < G.k
        assert is_telescopic(result), G
        assert is_minimal_bf(result), G
        assert monoids_equal(result, G), G
        for step in trace.steps:
            assert step.after.k == step.before.k - 1
            assert is_telescopic(step.after)
            assert monoids_equal(step.after, step.before)


def test_dichotomy(reduction_corpus):
    for G in reduction_corpus:
        c = gcd_profile(G).c
        for n in range(1, G.k + 1):
            others = Sequence(G.terms[:n - 1] + G.terms[n:])
            if not contains(others, G.term(n)):
                continue
            case1 = n >= 2 and c[n - 2] == 1 and contains(prefix(G, n - 1), G.term(n))
            case2 = any(G.term(n) == c[m - 2] * G.term(m) for m in range(n + 1, G.k + 1))
            assert case1 or case2, (G, n)


def _representations(target, generators, limit=2000):
    """target = Σ a_i·generators[i] 的所有非负解（最多 limit 个）"""
    found = []

    def walk(index, remaining, coeffs):
        if len(found) >= limit:
            return
        g = generators[index]
        if index == len(generators) - 1:
            # 最后一项直接整除求系数
            if g and remaining % g == 0:
                found.append(tuple(coeffs + [remaining // g]))
            elif not g and remaining == 0:
                found.append(tuple(coeffs + [0]))
            return
        top = remaining // g if g else 0
        for a in range(top + 1):
            walk(index + 1, remaining - a * g, coeffs + [a])

    walk(0, target, [])
    return found


def test_last_coefficient_divisible():
    rng = random.Random(1414)
    checked = 0
    for _ in range(120):
        G = build(random_request(rng, k_max=4, c_max=4, z_bound=12, c_min=2))
        c = gcd_profile(G).c
        for n, m in itertools.combinations(range(1, G.k + 1), 2):
            indices = [i for i in range(1, m + 1) if i != n]
            generators = [G.term(i) for i in indices]
            for coeffs in _representations(G.term(n), generators):
                a_m = coeffs[indices.index(m)]
                assert a_m % c[m - 2] == 0, (G, n, m, coeffs)
                checked += 1
    assert checked > 0


def test_minimize_large_terms():
    G = large_telescopic()
    assert is_minimal_telescopic(G)
    extended = Sequence(G.terms + (2 * (LARGE_P + LARGE_Q),))
    assert find_redundancy(extended) == RedundancyWitness(CASE1, 4)
    result, trace = minimize_telescopic(extended)
    assert result == G
    assert len(trace) == 1
