"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with the number of cases
checked.  Run ``pytest tests/test_acceptance.py -s`` or execute this file
directly to see just those lines.
"""
import sys
import time

from springer_extremal import sweeps


CRITERIA = [
    ("recursive mult equals brute force", sweeps.mult_oracle),
    ("symbol dominance with equality on the constrained set", sweeps.symbol_dominance),
    ("nonzero mult implies dominance, equality locus has mult 1", sweeps.multiplicity_support),
    ("unique maximal constituent of multiplicity one, 2N<=8", sweeps.max_constituents),
    ("twisted minimal constituent, 2N<=8", sweeps.min_constituents),
    ("bar recursion equals reduction-set maximum, 2N<=10", sweeps.recursion_matches_max),
    ("bar recursion keeps k, 2N<=12", sweeps.recursion_keeps_k),
    ("doubled U,V union matches the twisted transpose, 2N<=12", sweeps.half_sequences),
    ("correspondence round trip and rank stability, 2N<=10", sweeps.springer_bijection),
    ("dominance transfer within each k block, 2N<=10", sweeps.dominance_transfer),
    ("sampled partial-sum inequalities", sweeps.partial_sum_bounds),
    ("half-step reduction sets agree, 2N<=10", sweeps.half_step),
]


def _check(number, capsys=None):
    title, fn = CRITERIA[number - 1]
    started = time.perf_counter()
    res = fn()
    elapsed = time.perf_counter() - started
    line = (
        f"{'PASS' if res.passed else 'FAIL'} criterion {number} ({title}): "
        f"{res.checked} checked, {res.failure_count} failed, {elapsed:.1f}s"
    )
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    for witness in res.failures[:5]:
        print(f"  witness: {witness!r}", file=sys.stderr)
    return res


def test_criterion_01_mult_recursion_matches_bruteforce(capsys):
    assert _check(1, capsys).passed


def test_criterion_02_constrained_symbols_dominate(capsys):
    assert _check(2, capsys).passed


def test_criterion_03_multiplicity_support(capsys):
    assert _check(3, capsys).passed


def test_criterion_04_unique_maximum(capsys):
    assert _check(4, capsys).passed


def test_criterion_05_unique_minimum(capsys):
    assert _check(5, capsys).passed


def test_criterion_06_bar_recursion_matches_maximum(capsys):
    assert _check(6, capsys).passed


def test_criterion_07_bar_keeps_k(capsys):
    assert _check(7, capsys).passed


def test_criterion_08_half_sequences(capsys):
    assert _check(8, capsys).passed


def test_criterion_09_springer_bijection(capsys):
    assert _check(9, capsys).passed


def test_criterion_10_dominance_transfer(capsys):
    assert _check(10, capsys).passed


def test_criterion_11_partial_sum_bounds(capsys):
    assert _check(11, capsys).passed


def test_criterion_12_half_step_sets(capsys):
    assert _check(12, capsys).passed


if __name__ == "__main__":
    results = [_check(n) for n in range(1, len(CRITERIA) + 1)]
    sys.exit(0 if all(r.passed for r in results) else 1)
