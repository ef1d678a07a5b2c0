#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""望远镜闭式测试：示例与随机语料上的暴力交叉验证"""

import itertools

import pytest

from numsemi.base import (
    HeadZero,
    InvalidDecomposition,
    NonUnitGcd,
    NotMultipleOfGcd,
    NotTelescopic,
    SizeCapExceeded,
)
from numsemi.oracle import IntPolynomial, apery_bf, contains, gaps, tuenter_check
from numsemi.seqcore import Sequence, gcd_profile, prefix, scale, swap
from numsemi.telescopic import (
    TelescopicSequence,
    ZDecomposition,
    apery_closed,
    contains_fast,
    frobenius_closed,
    gap_identity_check,
    genus_closed,
    is_telescopic,
    prefix_witness,
    represent,
    semigroup_contains,
    telescopic_witness,
    z_decompose,
)
from numsemi.tests.corpus import LARGE_P, LARGE_Q, large_telescopic

POLYNOMIALS = [IntPolynomial.parse(p) for p in ('1', '0,1', '0,0,1', '0,0,0,1')]


def test_is_telescopic_examples():
    assert is_telescopic(Sequence.of(4, 6, 5))
    assert telescopic_witness(Sequence.of(3, 4, 5)) == 3
    assert is_telescopic(Sequence.of(660, 550, 352, 50, 201))
    assert telescopic_witness(Sequence.of(660, 352, 50, 201)) == 3
    assert is_telescopic(Sequence.of(7))
    with pytest.raises(HeadZero):
        is_telescopic(Sequence.of(0, 4))


def test_z_decompose_examples():
    Z = z_decompose(Sequence.of(30, 18, 20, 33))
    assert (Z.d, Z.c, Z.z) == (1, (5, 3, 2), (1, 3, 10, 33))
    Z = z_decompose(Sequence.of(4, 7))
    assert (Z.d, Z.c, Z.z) == (1, (4,), (1, 7))
    Z = z_decompose(Sequence.of(360, 120, 60, 12, 4))
    assert Z.d == 4
    assert Z.z == (4, 4, 4, 4, 4)
    assert Z.sequence() == Sequence.of(360, 120, 60, 12, 4)
    assert Z.to_dict() == {'d': '4', 'c': ['3', '2', '5', '3'], 'z': ['4', '4', '4', '4', '4']}
    assert ZDecomposition.from_dict(Z.to_dict()) == Z


def test_z_decompose_rejects_non_telescopic():
    with pytest.raises(NotTelescopic) as excinfo:
        z_decompose(Sequence.of(3, 4, 5))
    assert excinfo.value.index == 3


def test_z_decomposition_validate():
    ZDecomposition(1, (5, 3, 2), (1, 3, 10, 33)).validate()
    with pytest.raises(InvalidDecomposition) as excinfo:
        ZDecomposition(1, (5, 3, 2), (1, 5, 10, 33)).validate()
    assert excinfo.value.index == 2
    with pytest.raises(InvalidDecomposition):
        ZDecomposition(2, (2,), (1, 3)).validate()
    with pytest.raises(InvalidDecomposition):
        ZDecomposition(1, (2,), (1,)).validate()


def test_represent_examples():
    G = Sequence.of(4, 6, 5)
    rep = represent(G, 7)
    assert (rep.n1, rep.coeffs) == (-1, (1, 1))
    assert rep.to_dict() == {'n1': '-1', 'coeffs': ['1', '1']}
    assert (represent(G, 0).n1, represent(G, 0).coeffs) == (0, (0, 0))
    assert (represent(G, 11).n1, represent(G, 11).coeffs) == (0, (1, 1))
    with pytest.raises(NotMultipleOfGcd):
        represent(Sequence.of(360, 120, 60, 12, 4), 6)


def test_represent_is_unique_in_box():
    G = Sequence.of(660, 550, 352, 50, 201)
    c = gcd_profile(G).c
    for n in (0, 1, 902, 12345, -77):
        rep = represent(G, n)
        assert all(0 <= a < c_j for a, c_j in zip(rep.coeffs, c))
        assert rep.n1 * 660 + sum(a * g for a, g in zip(rep.coeffs, G.terms[1:])) == n
        hits = [
            box for box in itertools.product(*(range(c_j) for c_j in c))
            if (n - sum(a * g for a, g in zip(box, G.terms[1:]))) % 660 == 0
        ]
        assert hits == [rep.coeffs]


def test_contains_fast_examples():
    G = Sequence.of(4, 6, 5)
    assert not contains_fast(G, 7)
    assert contains_fast(G, 11)
    assert not contains_fast(G, 3)
    assert not contains_fast(Sequence.of(360, 120, 60, 12, 4), 6)
    assert contains_fast(Sequence.of(360, 120, 60, 12, 4), 16)


def test_closed_forms_examples():
    assert set(apery_closed(Sequence.of(4, 6, 5)).values()) == {0, 5, 6, 11}
    assert apery_closed(Sequence.of(1)) == {0: 0}
    assert set(apery_closed(Sequence.of(4, 6, 9)).values()) == {0, 6, 9, 15}
    assert (frobenius_closed(Sequence.of(4, 6, 5)), genus_closed(Sequence.of(4, 6, 5))) == (7, 4)
    assert (frobenius_closed(Sequence.of(1)), genus_closed(Sequence.of(1))) == (-1, 0)
    assert (frobenius_closed(Sequence.of(4, 6, 9)), genus_closed(Sequence.of(4, 6, 9))) == (11, 6)


def test_closed_forms_errors():
    with pytest.raises(NonUnitGcd):
        frobenius_closed(Sequence.of(360, 120, 60, 12, 4))
    with pytest.raises(NonUnitGcd):
        apery_closed(Sequence.of(4, 6))
    with pytest.raises(NotTelescopic):
        genus_closed(Sequence.of(3, 4, 5))
    with pytest.raises(SizeCapExceeded):
        apery_closed(Sequence.of(660, 550, 352, 50, 201), cap=100)


def test_gap_identity_examples():
    G = Sequence.of(4, 6, 5)
    assert gap_identity_check(G, POLYNOMIALS[1]) == (16, 16)
    assert gap_identity_check(G, POLYNOMIALS[0]) == (0, 0)
    lhs, rhs = gap_identity_check(Sequence.of(4, 6, 9), POLYNOMIALS[2])
    assert lhs == rhs


def test_wrapper_reuses_profile():
    T = TelescopicSequence(Sequence.of(660, 550, 352, 50, 201))
    assert T.gcd == 1
    assert T.decomposition.c == (6, 5, 11, 2)
    assert T.frobenius() == 2 * T.genus() - 1


def test_large_terms_use_exact_arithmetic():
    G = large_telescopic()
    assert prefix_witness(G) is None
    T = TelescopicSequence(G)
    assert T.profile.c == (LARGE_P, LARGE_Q)
    assert T.decomposition.z == (1, LARGE_Q, LARGE_P + LARGE_Q)
    F = frobenius_closed(G)
    assert F == LARGE_P * LARGE_Q ** 2 - LARGE_P - LARGE_Q
    assert F == 1000000810000188500009539
    assert genus_closed(G) == (F + 1) // 2
    assert not contains_fast(G, F)
    assert contains_fast(G, F + 1)
    assert contains_fast(G, LARGE_P + LARGE_Q)
    rep = represent(G, 12345)
    assert rep.n1 < 0
    assert rep.n1 * G.terms[0] + sum(a * g for a, g in zip(rep.coeffs, G.terms[1:])) == 12345
    assert semigroup_contains(G, 2 * (LARGE_P + LARGE_Q) + LARGE_Q ** 2)


def test_large_non_telescopic_is_rejected():
    # 交换后两项：q² ∉ ⟨pq, p+q⟩
    G = swap(large_telescopic(), 2, 3)
    assert prefix_witness(G) == 3
    with pytest.raises(NotTelescopic) as excinfo:
        frobenius_closed(G)
    assert excinfo.value.index == 3


def test_prefix_witness_examples():
    assert prefix_witness(Sequence.of(3, 4, 5)) == 3
    assert prefix_witness(Sequence.of(660, 352, 50, 201)) == 3
    assert prefix_witness(Sequence.of(660, 550, 352, 50, 201)) is None
    assert prefix_witness(Sequence.of(7)) is None
    assert prefix_witness(Sequence.of(4, 0, 6)) is None
    with pytest.raises(HeadZero):
        prefix_witness(Sequence.of(0, 4))


def test_prefix_witness_matches_oracle(random_corpus, free_corpus):
    for G in random_corpus:
        assert prefix_witness(G) == telescopic_witness(G), G
    for G in free_corpus[:100]:
        assert prefix_witness(G) is None, G
        reversed_G = Sequence(reversed(G.terms))
        assert prefix_witness(reversed_G) == telescopic_witness(reversed_G), G


def test_prefix_closure(mixed_gcd_corpus):
    for G in mixed_gcd_corpus:
        c = gcd_profile(G).c
        for m in range(1, G.k + 1):
            P = prefix(G, m)
            assert is_telescopic(P), (G, m)
            assert gcd_profile(P).c == c[:m - 1], (G, m)


def test_head_swap_preserves_telescopic(random_corpus, mixed_gcd_corpus):
    for G in random_corpus + mixed_gcd_corpus[:100]:
        if G.k < 2:
            continue
        assert is_telescopic(G) == is_telescopic(swap(G, 1, 2)), G


def test_scale_preserves_telescopic(random_corpus, mixed_gcd_corpus):
    for G in random_corpus[:200] + mixed_gcd_corpus[:100]:
        expected = is_telescopic(G)
        for m in (1, 2, 3, 7):
            assert is_telescopic(scale(G, m)) == expected, (G, m)


def test_closed_forms_match_oracle(free_corpus):
    assert len(free_corpus) >= 500
    for G in free_corpus:
        T = TelescopicSequence(G)
        summary = gaps(G)
        g1 = G.terms[0]
        assert T.frobenius() == summary.frobenius, G
        assert T.genus() == summary.genus, G
        assert T.frobenius() == 2 * T.genus() - 1, G
        assert T.apery() == apery_bf(G, g1), G
        gap_set = set(summary.gaps)
        for n in range(summary.frobenius + 2 * g1 + 1):
            assert T.contains(n) == (n not in gap_set), (G, n)


def test_contains_fast_matches_dp_sample(free_corpus):
    for G in free_corpus[:40]:
        T = TelescopicSequence(G)
        top = T.frobenius() + 2 * G.terms[0]
        for n in range(0, top + 1, max(top // 25, 1)):
            assert T.contains(n) == contains(G, n), (G, n)


def test_represent_reconstructs_value(mixed_gcd_corpus):
    for G in mixed_gcd_corpus[:200]:
        T = TelescopicSequence(G)
        d = T.gcd
        c = T.profile.c
        for n in (0, d, 7 * d, G.terms[0] * d + d, -3 * d):
            rep = T.represent(n)
            assert all(0 <= a < c_j for a, c_j in zip(rep.coeffs, c))
            assert rep.n1 * G.terms[0] + sum(a * g for a, g in zip(rep.coeffs, G.terms[1:])) == n


def test_z_decompose_round_trip(mixed_gcd_corpus):
    for G in mixed_gcd_corpus:
        Z = z_decompose(G)
        Z.validate()
        assert Z.d == G.gcd()
        assert Z.sequence() == G


def test_gap_identities(free_corpus):
    for G in free_corpus[:100]:
        g1 = G.terms[0]
        for f in POLYNOMIALS:
            lhs, rhs = gap_identity_check(G, f)
            assert lhs == rhs, (G, str(f))
            assert tuenter_check(G, g1, f) == (lhs, rhs), (G, str(f))
