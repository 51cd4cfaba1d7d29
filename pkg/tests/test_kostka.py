import random
from itertools import permutations, product

import pytest

from springer_extremal.kostka import (
    crossed_pairs,
    mult_bruteforce,
    mult_recursive,
    q_set,
    shift_apply,
    sign_of,
    twist,
    x_solution_count,
    zero_shift,
)
from springer_extremal.pab import IndexedPair
from springer_extremal.sweeps import small_pairs, targets_of


def test_crossed_pairs_and_shift():
    pair = IndexedPair((1,), (1, 1), "ABB")
    assert crossed_pairs(pair) == [((1, 0), (1, 1)), ((1, 0), (2, 1))]
    x = zero_shift(pair)
    assert shift_apply(pair, x) == ((1,), (1, 1))
    x[((1, 0), (2, 1))] = 1
    assert shift_apply(pair, x) == ((2,), (1, 0))
    with pytest.raises(ValueError):
        shift_apply(pair, {})
    assert crossed_pairs(IndexedPair((2, 1), (), "AA")) == []


def test_sign_and_twist():
    assert sign_of((1, 2, 3)) == 1
    assert sign_of((2, 1, 3)) == -1
    assert sign_of((2, 3, 1)) == 1
    assert twist((2, 1), (2, 1)) == (0, 3)
    assert twist((3, 1, 0), (1, 2, 3)) == (3, 1, 0)
    with pytest.raises(ValueError):
        twist((1, 0), (1, 1))


def test_twist_onto_a_partition_is_unique():
    for nu in [(3, 1, 0), (2, 2, 1), (0, 0, 0), (4, 2, 2)]:
        for alpha in [(3, 1, 0), (2, 2, 1), (1, 1, 1), (2, 1, 0)]:
            hits = [w for w in permutations(range(1, 4)) if twist(nu, w) == alpha]
            assert len(hits) <= 1


def test_x_count_examples():
    pair = IndexedPair((0,), (1,), "AB")
    assert x_solution_count(pair, (1,), (0,)) == 1
    assert x_solution_count(pair, (2,), (-1,)) == 1
    assert x_solution_count(pair, (0,), (1,)) == 1
    assert x_solution_count(pair, (-1,), (2,)) == 0
    assert x_solution_count(IndexedPair((1, 0), (1,), "ABA"), (1, 0), (1,)) == 1


def _naive_count(pair, nu_t, mu_t, bound):
    keys = crossed_pairs(pair)
    hits = 0
    for values in product(range(bound + 1), repeat=len(keys)):
        if shift_apply(pair, dict(zip(keys, values))) == (tuple(nu_t), tuple(mu_t)):
            hits += 1
    return hits


def test_x_count_against_naive_enumeration():
    rng = random.Random(7)
    for pair in small_pairs(4, 1):
        total = sum(pair.alpha) + sum(pair.beta)
        # a unit can be passed along at most n + m times
        bound = (total + 2) * (pair.n + pair.m)
        if len(crossed_pairs(pair)) > 3:
            continue
        for _ in range(3):
            nu_t = tuple(rng.randint(-1, total + 1) for _ in range(pair.n))
            mu_t = tuple(rng.randint(-1, total + 1) for _ in range(pair.m))
            assert x_solution_count(pair, nu_t, mu_t) == _naive_count(pair, nu_t, mu_t, bound)
        assert x_solution_count(pair, pair.alpha, pair.beta) == 1


def test_mult_examples():
    pair = IndexedPair((0,), (1,), "AB")
    assert mult_bruteforce(pair, (1,), (0,)).value == 1
    assert mult_bruteforce(pair, (0,), (1,)).value == 1
    pair = IndexedPair((1,), (1, 1), "ABB")
    assert mult_bruteforce(pair, (2,), (1, 0)).value == 1
    assert mult_recursive(pair, (2,), (1, 0)) == 1
    one_sided = IndexedPair((2, 1), (), "AA")
    assert mult_bruteforce(one_sided, (2, 1), ()).value == 1
    assert mult_bruteforce(one_sided, (3, 0), ()).value == 0
    assert mult_recursive(one_sided, (3, 0), ()) == 0
    assert mult_bruteforce(pair, (9,), (0, 0)).value == 0


def test_mult_audit_sums_to_value():
    pair = IndexedPair((1, 0), (1,), "ABA")
    for nu, mu in targets_of(pair):
        res = mult_bruteforce(pair, nu, mu)
        assert sum(res.audit.values()) == res.value
        assert all(term != 0 for term in res.audit.values())


def test_q_set_examples():
    assert q_set(1, 2, (1, 0)) == [(2, 0), (1, 1)]
    assert (1, 0) in q_set(1, 1, (1, 0))
    assert q_set(3, 1, (1, 0)) == []
    assert q_set(0, 0, ()) == [()]
    assert q_set(0, 1, ()) == []


def test_recursion_matches_bruteforce_on_random_pairs():
    rng = random.Random(11)
    pairs = list(small_pairs(5, 3))
    for pair in rng.sample(pairs, 60):
        for nu, mu in targets_of(pair):
            assert mult_recursive(pair, nu, mu) == mult_bruteforce(pair, nu, mu).value
