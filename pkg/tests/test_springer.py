from fractions import Fraction

import pytest

from springer_extremal.partitions import MarkedSymplectic as MS, enumerate_marked, sorted_union, transpose
from springer_extremal.springer import (
    SpringerDatum,
    doubled_union,
    epsilon_on_indices,
    even_m_value,
    even_marked_symbols,
    k_of,
    m_value,
    marked_symbols,
    order_from_pair,
    pair_symbols,
    pair_to_springer,
    sharp_symbols,
    sign_twist,
    springer_to_pair,
    u_v_sequences,
)
from springer_extremal.extremal import even_marked


def test_epsilon_and_m():
    assert epsilon_on_indices(MS((2,), {2: 1}), 1) == (1, 1, 1)
    assert epsilon_on_indices(MS((2, 2), {2: -1}), 1) == (-1, -1, 1)
    assert epsilon_on_indices(MS((4, 2), {4: 1, 2: -1}), 1) == (1, -1, 1)
    assert m_value(MS((2,), {2: 1})) == 0
    assert m_value(MS((2,), {2: -1})) == -1
    assert m_value(MS((2, 2), {2: -1})) == 0
    assert k_of(MS((2,), {2: -1})) == 1
    assert k_of(MS((4, 2), {4: -1, 2: -1})) == 0
    assert k_of(MS(())) == 0


def test_sharp_symbols_examples():
    assert sharp_symbols((1, 1), 1) == ((2, 0), (2,))
    assert sharp_symbols((), 1) == ((2, 0), (1,))
    assert sharp_symbols((2, 0), 1) == ((3, 0), (1,))


def test_marked_symbols_examples():
    assert marked_symbols(MS((2, 2), {2: 1}), 1) == ((3, 0), (2,))
    for ms in enumerate_marked(6):
        if all(sign == 1 for _, sign in ms.eps):
            assert marked_symbols(ms, 3) == sharp_symbols(ms.lam, 3)


def test_pair_symbols_examples():
    assert pair_symbols(SpringerDatum(0, (1, 0), (1,), 1)) == ((3, 0), (2,))
    assert pair_symbols(SpringerDatum(0, (2, 0), (0,), 1)) == ((4, 0), (1,))
    assert pair_symbols(SpringerDatum(1, (0, 0), (0,), 1)) == ((0,), (3, 1))
    with pytest.raises(ValueError):
        SpringerDatum(0, (1,), (1,), 1)


def test_springer_examples():
    sd = springer_to_pair(MS((2, 2), {2: 1}), 1)
    assert (sd.k, sd.alpha, sd.beta) == (0, (1, 0), (1,))
    sd = springer_to_pair(MS((4,), {4: 1}), 1)
    assert (sd.k, sd.alpha, sd.beta) == (0, (2, 0), (0,))
    sd = springer_to_pair(MS((1, 1)), 1)
    assert (sd.k, sd.alpha, sd.beta) == (0, (0, 0), (1,))
    assert pair_to_springer(SpringerDatum(0, (2, 0), (0,), 1)) == MS((4,), {4: 1})
    assert pair_to_springer(SpringerDatum(0, (0, 0), (1,), 1)) == MS((1, 1))
    sd = springer_to_pair(MS((2,), {2: -1}))
    assert sd.k == 1 and sd.size == 1


def test_sign_twist_examples():
    assert sign_twist(MS((2,), {2: 1})) == MS((1, 1))
    assert sign_twist(MS(())) == MS(())


def test_order_from_pair():
    assert order_from_pair(SpringerDatum(0, (1, 0), (1,), 1)) == "ABA"
    assert order_from_pair(SpringerDatum(0, (2, 0), (0,), 1)) == "ABA"
    with pytest.raises(ValueError):
        # (1,1),{} at r=1 has merged symbol (2,2,0)
        order_from_pair(springer_to_pair(MS((1, 1)), 1))


def test_u_v_examples():
    u, v = u_v_sequences(MS((2,), {2: 1}), 1)
    assert u == (2, Fraction(1, 2), 0)
    assert v == (Fraction(1, 2), 0)
    u, v = u_v_sequences(MS(()), 1)
    assert u == (1, Fraction(1, 2), 0)
    assert v == (Fraction(1, 2), 0)


@pytest.mark.parametrize("two_n", [0, 2, 4, 6, 8])
def test_even_formulas_agree(two_n):
    for ms in even_marked(two_n):
        for r in (ms.size, ms.size + 1):
            assert even_marked_symbols(ms, r) == marked_symbols(ms, r)
            assert even_m_value(ms, r) == m_value(ms)
            a_side, b_side = marked_symbols(ms, r)
            merged = sorted_union(a_side, b_side)
            assert len(set(merged)) == len(merged)


@pytest.mark.parametrize("two_n", [0, 2, 4, 6, 8])
def test_round_trip_and_rank_stability(two_n):
    data = set()
    for ms in enumerate_marked(two_n):
        base = springer_to_pair(ms)
        assert pair_to_springer(base) == ms
        wide = springer_to_pair(ms, base.r + 2)
        assert wide == base.at_rank(base.r + 2)
        assert wide.trimmed() == base.trimmed()
        data.add(base.trimmed())
    assert len(data) == len(enumerate_marked(two_n))


@pytest.mark.parametrize("two_n", [0, 2, 4, 6, 8])
def test_sign_twist_is_involution_keeping_k(two_n):
    for ms in enumerate_marked(two_n):
        tw = sign_twist(ms)
        assert sign_twist(tw) == ms
        assert k_of(tw) == k_of(ms)
        assert tw.size == ms.size


def test_doubled_union_identity_small():
    for ms in even_marked(6):
        r = ms.size
        u, v = u_v_sequences(ms, r)
        tw = sign_twist(ms)
        shifted = sorted_union(range(2 * r, -1, -1), range(2 * r - 1, -1, -1))
        expected = tuple(a + b for a, b in zip(transpose(tw.lam, len(shifted)), shifted))
        assert doubled_union(u, v) == expected
