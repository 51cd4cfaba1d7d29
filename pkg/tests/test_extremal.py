import pytest

from springer_extremal.extremal import (
    bar,
    bar_step,
    dominance_rank,
    even_marked,
    lambda_max,
    lambda_min,
    mult_pair,
    mult_table,
    verify_extremal,
)
from springer_extremal.partitions import MarkedSymplectic as MS, partition_lt
from springer_extremal.springer import k_of, sign_twist


def test_bar_step_examples():
    t = bar_step(MS((2,), {2: 1}), 1)
    assert (t.frak_s, t.j_b, t.bar_first, t.derived) == ((1, 2, 3), {2}, 2, MS(()))
    t = bar_step(MS((2, 2), {2: 1}), 1)
    assert (t.frak_s, t.bar_first, t.derived) == ((1, 2, 3), 4, MS(()))
    t = bar_step(MS((2, 2), {2: -1}), 1)
    assert (t.frak_s, t.j_a, t.bar_first, t.derived) == ((1, 2), {2, 3}, 2, MS((2,), {2: -1}))


def test_bar_examples():
    assert bar(MS((2,), {2: 1})) == MS((2,), {2: 1})
    assert bar(MS((2, 2), {2: 1})) == MS((4,), {4: 1})
    assert bar(MS((2, 2), {2: -1})) == MS((2, 2), {2: -1})
    assert bar(MS(())) == MS(())


def test_extremal_examples():
    assert lambda_max(MS((2, 2), {2: 1})) == MS((4,), {4: 1})
    assert lambda_max(MS((2,), {2: 1})) == MS((2,), {2: 1})
    assert lambda_max(MS((2, 2), {2: -1})) == MS((2, 2), {2: -1})
    assert lambda_min(MS((2, 2), {2: 1})) == sign_twist(MS((4,), {4: 1}))
    assert lambda_min(MS((2,), {2: 1})) == MS((1, 1))


def test_mult_examples():
    src = MS((2, 2), {2: 1})
    assert mult_pair(src, src) == 1
    assert mult_pair(src, MS((4,), {4: 1})) == 1
    assert mult_pair(src, MS((2, 1, 1), {2: 1})) == 0
    assert mult_pair(src, MS((4,), {4: -1})) == 0
    assert mult_table(MS((2,), {2: 1})).entries == {MS((2,), {2: 1}): 1}
    table = mult_table(src)
    assert table.entries == {src: 1, MS((4,), {4: 1}): 1}
    assert mult_table(MS(())).entries == {MS(()): 1}
    assert dominance_rank(table) == {MS((4,), {4: 1}): 0, src: 1}


def test_minimality_of_source():
    for two_n in (2, 4, 6, 8):
        for ms in even_marked(two_n):
            for target, value in mult_table(ms).entries.items():
                assert target == ms or partition_lt(ms.lam, target.lam)
                assert k_of(target) == k_of(ms)


@pytest.mark.parametrize("two_n", [2, 4, 6])
def test_audit_tables_match(two_n):
    for ms in even_marked(two_n):
        assert mult_table(ms, audit=True).entries == mult_table(ms).entries


def test_verify_examples():
    assert verify_extremal(MS((2, 2), {2: 1})).passed
    assert verify_extremal(MS(())).passed


def test_odd_parts_rejected():
    with pytest.raises(ValueError):
        lambda_max(MS((1, 1)))
    with pytest.raises(ValueError):
        bar(MS((2, 1, 1), {2: 1}))
    with pytest.raises(ValueError):
        mult_table(MS((3, 3)))
