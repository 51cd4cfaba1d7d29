"""Extremal constituents of the representation attached to an even marked
partition: the largest one by an explicit recursion and by the constrained
reduction set, the smallest one via the sign twist, and a checker that
compares both against the full multiplicity table.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .kostka import mult_bruteforce, mult_recursive
from .pab import IndexedPair, Params, p_constrained_set
from .partitions import MarkedSymplectic, enumerate_marked, pad, partition_lt, sorted_union
from .springer import (
    SpringerDatum,
    default_rank,
    epsilon_on_indices,
    k_of,
    order_from_pair,
    pair_to_springer,
    sign_twist,
    springer_to_pair,
)


def _require_even(ms: MarkedSymplectic) -> None:
    if not ms.is_even():
        raise ValueError(f"only partitions with all parts even are supported, got {ms.lam!r}")


@dataclass(frozen=True)
class BarTrace:
    frak_s: tuple[int, ...]
    j_a: frozenset
    j_b: frozenset
    bar_first: int
    derived: MarkedSymplectic


def bar_step(ms: MarkedSymplectic, r: int | None = None) -> BarTrace:
    """One round of the recursion: the new largest part and the smaller couple left over."""
    _require_even(ms)
    n_half = ms.size // 2
    if n_half == 0:
        raise ValueError("the empty partition has no recursion step")
    r = default_rank(ms) if r is None else r
    eps = epsilon_on_indices(ms, r)
    lam = pad(ms.lam, 2 * r + 1)
    idx = range(1, 2 * r + 2)

    def e(j):
        return eps[j - 1]

    def part(j):
        return lam[j - 1]

    j_a = frozenset(j for j in idx if (-1) ** (j + 1) * e(j) == 1)
    j_b = frozenset(j for j in idx if (-1) ** j * e(j) == 1)
    frak_s = (1,) + tuple(j for j in idx if j >= 2 and e(j) * (-1) ** j != e(j - 1) * (-1) ** (j - 1))
    count = len(frak_s)
    top = sum(part(j) for j in frak_s) + count
    first_sign = e(1)
    bar_first = top - 1 - 2 * len(j_b) if first_sign == 1 else top - 2 * len(j_a)
    if bar_first % 2 or not 2 <= bar_first <= 2 * n_half:
        raise AssertionError(f"leading part {bar_first} out of range for {ms!r}")

    parts, signs = [], {}
    for j in idx:
        if j in frak_s:
            continue
        twisted = e(j) * (-1) ** j
        value = part(j) if twisted == -first_sign else part(j) + 2
        parts.append(value)
        if value == 0:
            continue
        h = max(h for h, s in enumerate(frak_s, start=1) if s < j)
        sign = (-1) ** (h + 1) * e(j)
        if signs.setdefault(value, sign) != sign:
            raise AssertionError(f"inconsistent signs on part {value} while reducing {ms!r}")
    parts.sort(reverse=True)
    derived = MarkedSymplectic(tuple(parts), tuple(signs.items()))
    if derived.size != 2 * n_half - bar_first:
        raise AssertionError(f"size bookkeeping failed while reducing {ms!r}")
    return BarTrace(frak_s, j_a, j_b, bar_first, derived)


def _bar(ms: MarkedSymplectic, r: int) -> tuple[MarkedSymplectic, list[BarTrace]]:
    if ms.size == 0:
        return ms, []
    step = bar_step(ms, r)
    rest, trace = _bar(step.derived, r)
    if rest.lam and step.bar_first < rest.lam[0]:
        raise AssertionError(f"leading parts increase while reducing {ms!r}")
    signs = rest.epsilon
    first_sign = epsilon_on_indices(ms, r)[0]
    if signs.setdefault(step.bar_first, first_sign) != first_sign:
        raise AssertionError(f"sign clash on part {step.bar_first} while reducing {ms!r}")
    out = MarkedSymplectic(sorted_union((step.bar_first,), rest.lam), tuple(signs.items()))
    return out, [step] + trace


def bar_with_trace(ms: MarkedSymplectic, r: int | None = None) -> tuple[MarkedSymplectic, list[BarTrace]]:
    _require_even(ms)
    r = default_rank(ms) if r is None else r
    return _bar(ms, r)


@lru_cache(maxsize=None)
def bar(ms: MarkedSymplectic) -> MarkedSymplectic:
    """Result of the full recursion; recomputed one rank higher to confirm it does not depend on the rank."""
    out, _ = bar_with_trace(ms)
    wider, _ = bar_with_trace(ms, default_rank(ms) + 1)
    if out != wider:
        raise AssertionError(f"recursion depends on the rank for {ms!r}: {out!r} vs {wider!r}")
    return out


def ordered_pair(ms: MarkedSymplectic, r: int | None = None) -> tuple[IndexedPair, SpringerDatum]:
    """The pair of ``ms`` together with the shuffle order read from its symbol."""
    _require_even(ms)
    sd = springer_to_pair(ms, r)
    return IndexedPair(sd.alpha, sd.beta, order_from_pair(sd)), sd


def mult_pair(ms: MarkedSymplectic, target: MarkedSymplectic, r: int | None = None, audit: bool = False) -> int:
    """Multiplicity of ``target`` in the representation attached to ``ms``."""
    _require_even(ms)
    if ms.size != target.size:
        raise ValueError("source and target must have the same size")
    if k_of(ms) != k_of(target):
        return 0
    pair, sd = ordered_pair(ms, r)
    other = springer_to_pair(target, sd.r)
    if audit:
        return mult_bruteforce(pair, other.alpha, other.beta).value
    return mult_recursive(pair, other.alpha, other.beta)


@dataclass
class MultTable:
    source: MarkedSymplectic
    entries: dict = field(default_factory=dict)

    def get(self, target: MarkedSymplectic) -> int:
        return self.entries.get(target, 0)


@lru_cache(maxsize=None)
def _table(ms: MarkedSymplectic, audit: bool) -> tuple:
    k = k_of(ms)
    out = []
    for target in enumerate_marked(ms.size):
        if k_of(target) != k:
            continue
        value = mult_pair(ms, target, audit=audit)
        if value:
            out.append((target, value))
    return tuple(out)


def mult_table(ms: MarkedSymplectic, audit: bool = False) -> MultTable:
    _require_even(ms)
    return MultTable(ms, dict(_table(ms, audit)))


def constrained_params(sd: SpringerDatum, step=2) -> Params:
    """Symbol parameters scaled so the progression step is ``step``."""
    base = sd.params()
    scale = Fraction(step, 2)
    return Params(base.N, base.M, base.A * scale, base.B * scale, step)


def max_by_reduction_set(ms: MarkedSymplectic, r: int | None = None) -> MarkedSymplectic:
    pair, sd = ordered_pair(ms, r)
    elements = p_constrained_set(pair, constrained_params(sd))
    if len(elements) != 1:
        raise AssertionError(f"constrained set of {ms!r} has {len(elements)} elements")
    ((alpha, beta),) = elements
    return pair_to_springer(SpringerDatum(sd.k, alpha, beta, sd.r))


def lambda_max(ms: MarkedSymplectic, check: bool = True) -> MarkedSymplectic:
    top = max_by_reduction_set(ms)
    if check:
        if top != bar(ms):
            raise AssertionError(f"largest constituent of {ms!r} disagrees with the recursion")
        if k_of(top) != k_of(ms):
            raise AssertionError(f"largest constituent of {ms!r} changes k")
    return top


def half_step_identity(ms: MarkedSymplectic) -> bool:
    """Whether the constrained sets at steps 2 and 1/2 (shifts scaled alike) coincide."""
    pair, sd = ordered_pair(ms)
    return p_constrained_set(pair, constrained_params(sd, 2)) == p_constrained_set(
        pair, constrained_params(sd, Fraction(1, 2))
    )


def lambda_min(ms: MarkedSymplectic, check: bool = True) -> MarkedSymplectic:
    low = sign_twist(lambda_max(ms, check=check))
    if check:
        if not half_step_identity(ms):
            raise AssertionError(f"constrained sets at steps 2 and 1/2 differ for {ms!r}")
        if sign_twist(low) != lambda_max(ms, check=False):
            raise AssertionError(f"sign twist is not an involution on {low!r}")
    return low


@dataclass
class ExtremalReport:
    source: MarkedSymplectic
    lambda_max: MarkedSymplectic
    lambda_min: MarkedSymplectic
    table: MultTable
    checks: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_extremal(ms: MarkedSymplectic) -> ExtremalReport:
    _require_even(ms)
    table = mult_table(ms)
    top = max_by_reduction_set(ms)
    low = sign_twist(top)
    report = ExtremalReport(ms, top, low, table)
    bad = report.counterexamples

    def record(name, ok, detail=None):
        report.checks[name] = report.checks.get(name, True) and ok
        if not ok and detail is not None:
            bad.append(f"{name}: {detail}")

    record("max_has_multiplicity_one", table.get(top) == 1, f"mult of {top!r} is {table.get(top)}")
    for target, value in table.entries.items():
        if target != top:
            record("max_strictly_dominates", partition_lt(target.lam, top.lam), f"{target!r} has mult {value}")

    twisted = {sign_twist(t): v for t, v in table.entries.items()}
    record("min_has_multiplicity_one", twisted.get(low, 0) == 1, f"twisted mult of {low!r} is {twisted.get(low, 0)}")
    for target, value in twisted.items():
        if target != low:
            record("min_strictly_dominated", partition_lt(low.lam, target.lam), f"{target!r} has twisted mult {value}")

    record("source_has_multiplicity_one", table.get(ms) == 1, f"mult of the source is {table.get(ms)}")
    for target, value in table.entries.items():
        if target != ms:
            record("source_strictly_below", partition_lt(ms.lam, target.lam), f"{target!r} has mult {value}")

    rec = bar(ms)
    record("recursion_agrees", rec == top, f"recursion gives {rec!r}, reduction set gives {top!r}")
    record("recursion_keeps_k", k_of(rec) == k_of(ms), f"k changes to {k_of(rec)}")
    record("half_step_identity", half_step_identity(ms), "constrained sets differ")
    return report


def dominance_rank(table: MultTable) -> dict:
    """Number of table entries whose partition strictly dominates each entry's."""
    keys = list(table.entries)
    return {t: sum(1 for u in keys if partition_lt(t.lam, u.lam)) for t in keys}


def even_marked(two_n: int) -> list[MarkedSymplectic]:
    return [ms for ms in enumerate_marked(two_n) if ms.is_even()]

