"""Exhaustive and sampled checks of the structural results, one function per
check.  Each returns a ``SweepResult``; failures carry printable witnesses.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .extremal import bar, even_marked, half_step_identity, max_by_reduction_set, mult_table
from .kostka import mult_bruteforce, mult_recursive
from .pab import (
    IndexedPair,
    Params,
    b_count,
    drop_first,
    merged_of,
    p_bracket,
    p_constrained_set,
    p_set,
)
from .partitions import (
    dominance_leq,
    enumerate_bipartitions,
    enumerate_marked,
    partial_sum,
    partition_leq,
    partition_lt,
    partitions_fitting,
    sorted_union,
    transpose,
)
from .springer import (
    SpringerDatum,
    arith_progression,
    doubled_union,
    k_of,
    marked_symbols,
    pair_to_springer,
    sign_twist,
    springer_to_pair,
    u_v_sequences,
)

MAX_WITNESSES = 20

# Six (A, B, s) triples valid for every row length up to 5 and hitting the
# boundary cases alpha_1 + A = B and beta_1 + B = A for small parts.
PARAM_GRID = (
    (4, 4, 1),
    (5, 4, 1),
    (4, 6, 1),
    (8, 8, 2),
    (9, 8, 2),
    (2, Fraction(5, 2), Fraction(1, 2)),
)


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0 and self.checked > 0

    def fail(self, witness) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_WITNESSES:
            self.failures.append(witness)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {self.failure_count} failed"


def orders(n: int, m: int):
    for picks in combinations(range(n + m), n):
        chosen = set(picks)
        yield "".join("A" if i in chosen else "B" for i in range(n + m))


def small_pairs(max_total: int = 5, max_part: int = 3):
    """Every indexed pair with ``n + m <= max_total`` and parts at most ``max_part``."""
    for total in range(max_total + 1):
        for n in range(total + 1):
            m = total - n
            alphas = [a for s in range(n * max_part + 1) for a in partitions_fitting(s, n, max_part)]
            betas = [b for s in range(m * max_part + 1) for b in partitions_fitting(s, m, max_part)]
            for order in orders(n, m):
                for a in alphas:
                    for b in betas:
                        yield IndexedPair(a, b, order)


def targets_of(pair: IndexedPair):
    return enumerate_bipartitions(sum(pair.alpha) + sum(pair.beta), pair.n, pair.m)


def mult_oracle(max_total: int = 5, max_part: int = 3) -> SweepResult:
    res = SweepResult("recursive multiplicity equals the defining signed count")
    for pair in small_pairs(max_total, max_part):
        for nu, mu in targets_of(pair):
            res.checked += 1
            fast = mult_recursive(pair, nu, mu)
            slow = mult_bruteforce(pair, nu, mu).value
            if fast != slow:
                res.fail((pair, nu, mu, fast, slow))
    return res


def grid_params(pair: IndexedPair):
    for a, b, s in PARAM_GRID:
        yield Params(pair.n, pair.m, a, b, s)


def symbol_dominance(max_total: int = 5, max_part: int = 3) -> SweepResult:
    res = SweepResult("every reduction stays below the constrained symbol, with equality exactly on the constrained set")
    for pair in small_pairs(max_total, max_part):
        everything = p_set(pair)
        for params in grid_params(pair):
            constrained = p_constrained_set(pair, params)
            top = p_bracket(pair, params)
            if not constrained <= everything:
                res.fail((pair, params, "constrained set escapes"))
            for bp in everything:
                res.checked += 1
                merged = merged_of(bp, params)
                if not dominance_leq(merged, top) or (merged == top) != (bp in constrained):
                    res.fail((pair, params, bp))
    return res


def multiplicity_support(max_total: int = 5, max_part: int = 3) -> SweepResult:
    res = SweepResult("non-zero multiplicities sit below the constrained symbol and equal 1 on the constrained set")
    for pair in small_pairs(max_total, max_part):
        values = {(nu, mu): mult_recursive(pair, nu, mu) for nu, mu in targets_of(pair)}
        for params in grid_params(pair):
            constrained = p_constrained_set(pair, params)
            top = p_bracket(pair, params)
            for bp, value in values.items():
                res.checked += 1
                merged = merged_of(bp, params)
                ok = True
                if value and not dominance_leq(merged, top):
                    ok = False
                if merged == top and (value != 0) != (bp in constrained):
                    ok = False
                if bp in constrained and value != 1:
                    ok = False
                if not ok:
                    res.fail((pair, params, bp, value))
    return res


def max_constituents(max_two_n: int = 8) -> SweepResult:
    res = SweepResult("largest constituent has multiplicity 1 and strictly dominates every other constituent")
    for two_n in range(0, max_two_n + 1, 2):
        for ms in even_marked(two_n):
            res.checked += 1
            table = mult_table(ms)
            top = max_by_reduction_set(ms)
            ok = table.get(top) == 1 and all(
                partition_lt(t.lam, top.lam) for t in table.entries if t != top
            )
            maximal = [t for t in table.entries if not any(partition_lt(t.lam, u.lam) for u in table.entries)]
            if not ok or maximal != [top]:
                res.fail((ms, top, table.entries))
    return res


def min_constituents(max_two_n: int = 8) -> SweepResult:
    res = SweepResult("sign-twisted table has a unique minimum of multiplicity 1, the twist of the largest constituent")
    for two_n in range(0, max_two_n + 1, 2):
        for ms in even_marked(two_n):
            res.checked += 1
            table = mult_table(ms)
            twisted = {sign_twist(t): v for t, v in table.entries.items()}
            minimal = [t for t in twisted if not any(partition_lt(u.lam, t.lam) for u in twisted)]
            low = sign_twist(max_by_reduction_set(ms))
            ok = (
                minimal == [low]
                and twisted.get(low) == 1
                and all(partition_lt(low.lam, t.lam) for t in twisted if t != low)
            )
            if not ok:
                res.fail((ms, low, twisted))
    return res


def recursion_matches_max(max_two_n: int = 10) -> SweepResult:
    res = SweepResult("explicit recursion equals the largest constituent")
    for two_n in range(0, max_two_n + 1, 2):
        for ms in even_marked(two_n):
            res.checked += 1
            rec, top = bar(ms), max_by_reduction_set(ms)
            if rec != top:
                res.fail((ms, rec, top))
    return res


def recursion_keeps_k(max_two_n: int = 12) -> SweepResult:
    res = SweepResult("explicit recursion preserves k")
    for two_n in range(0, max_two_n + 1, 2):
        for ms in even_marked(two_n):
            res.checked += 1
            rec = bar(ms)
            if k_of(rec) != k_of(ms) or not rec.is_even():
                res.fail((ms, rec))
    return res


def half_sequences(max_two_n: int = 12) -> SweepResult:
    res = SweepResult("doubled half-integer sequences equal the shifted transpose of the twist")
    for two_n in range(0, max_two_n + 1, 2):
        for ms in even_marked(two_n):
            twisted = sign_twist(ms)
            for r in (two_n // 2, two_n // 2 + 1):
                res.checked += 1
                u, v = u_v_sequences(ms, r)
                lhs = doubled_union(u, v)
                shift = sorted_union(arith_progression(2 * r, 0, 1), arith_progression(2 * r - 1, 0, 1))
                rhs = tuple(x + y for x, y in zip(transpose(twisted.lam, 4 * r + 1), shift))
                if lhs != rhs:
                    res.fail((ms, r, lhs, rhs))
    return res


def springer_bijection(max_two_n: int = 10) -> SweepResult:
    res = SweepResult("correspondence is a bijection onto pairs and stable in the rank")
    for two_n in range(0, max_two_n + 1, 2):
        n_half = two_n // 2
        seen = set()
        for ms in enumerate_marked(two_n):
            for r in (n_half, n_half + 1):
                res.checked += 1
                sd = springer_to_pair(ms, r)
                if pair_to_springer(sd) != ms:
                    res.fail(("round trip", ms, r))
            low, high = springer_to_pair(ms, n_half), springer_to_pair(ms, n_half + 1)
            if low.at_rank(n_half + 1) != high:
                res.fail(("rank", ms, low, high))
            seen.add(low.trimmed())
        expected = set()
        k = 0
        while k * (k + 1) // 2 <= n_half:
            n, m = n_half + k // 2 + 1, n_half - k // 2
            for a, b in enumerate_bipartitions(n_half - k * (k + 1) // 2, n, m):
                res.checked += 1
                sd = SpringerDatum(k, a, b, n_half)
                if springer_to_pair(pair_to_springer(sd), n_half) != sd:
                    res.fail(("inverse", sd))
                expected.add(sd.trimmed())
            k += 1
        if seen != expected:
            res.fail(("image", two_n, len(seen), len(expected)))
    return res


def dominance_transfer(max_two_n: int = 10) -> SweepResult:
    res = SweepResult("dominance of partitions matches dominance of merged symbols within a k-block")
    for two_n in range(0, max_two_n + 1, 2):
        r = two_n // 2
        blocks: dict[int, list] = {}
        for ms in enumerate_marked(two_n):
            blocks.setdefault(k_of(ms), []).append((ms, sorted_union(*marked_symbols(ms, r))))
        for members in blocks.values():
            for one, merged_one in members:
                for two, merged_two in members:
                    res.checked += 1
                    if partition_leq(one.lam, two.lam) != dominance_leq(merged_one, merged_two):
                        res.fail((one, two))
    return res


def half_step(max_two_n: int = 10) -> SweepResult:
    res = SweepResult("constrained sets agree at step 2 and at step 1/2")
    for two_n in range(0, max_two_n + 1, 2):
        for ms in even_marked(two_n):
            res.checked += 1
            if not half_step_identity(ms):
                res.fail(ms)
    return res


def _random_pair(rng: random.Random, max_len: int, max_part: int) -> IndexedPair:
    n, m = rng.randint(0, max_len), rng.randint(0, max_len)
    a = tuple(sorted((rng.randint(0, max_part) for _ in range(n)), reverse=True))
    b = tuple(sorted((rng.randint(0, max_part) for _ in range(m)), reverse=True))
    letters = ["A"] * n + ["B"] * m
    rng.shuffle(letters)
    return IndexedPair(a, b, "".join(letters))


def _random_params(rng: random.Random, pair: IndexedPair) -> Params:
    s = rng.choice((Fraction(1, 2), 1, 2, Fraction(3, 2)))
    big_n, big_m = pair.n + rng.randint(0, 2), pair.m + rng.randint(0, 2)
    offset_a, offset_b = Fraction(rng.randint(0, 12), 2), Fraction(rng.randint(0, 12), 2)
    return Params(big_n, big_m, s * (big_n - 1) + offset_a, s * (big_m - 1) + offset_b, s)


def _sums(seq):
    return [partial_sum(seq, k) for k in range(len(seq) + 1)]


def partial_sum_bounds(samples: int = 12000, seed: int = 20261016) -> SweepResult:
    """Sampled partial-sum inequalities between constrained symbols of related pairs."""
    res = SweepResult("partial-sum bounds between constrained symbols of related pairs")
    rng = random.Random(seed)
    instances = 0
    while instances < samples:
        pair = _random_pair(rng, 4, 4)
        params = _random_params(rng, pair)
        s, big_a, big_b = params.s, params.A, params.B
        tried = False
        a1 = pair.alpha[0] if pair.n else 0
        b1 = pair.beta[0] if pair.m else 0

        # Removing the earliest entry on either side.
        for side in ("a", "b"):
            if side == "a" and not (pair.n and (pair.m == 0 or pair.a_first())):
                continue
            if side == "b" and not (pair.m and (pair.n == 0 or not pair.a_first())):
                continue
            tried = True
            res.checked += 1
            shorter = drop_first(pair, side)
            lo, hi = _sums(p_bracket(shorter, params)), _sums(p_bracket(pair, params))
            extra = a1 + b1
            if any(not (lo[k] <= hi[k] <= lo[k] + extra) for k in range(1, len(hi))):
                res.fail(("drop", side, pair, params))

        # Shrinking one row against the other.
        if params.N > pair.n and params.M > pair.m:
            tried = True
            res.checked += 1
            left = _sums(p_bracket(pair, params.after_b()))
            right = _sums(p_bracket(pair, params.after_a()))
            slack = max(a1 + big_a - big_b, 0)
            if any(left[k] > right[k] + slack for k in range(1, params.N + params.M)):
                res.fail(("rows", pair, params))

        # Lower bounds through the pair with its first alpha entry removed.
        if pair.n and (pair.m == 0 or pair.a_first()) and params.N >= 1:
            tried = True
            shorter = drop_first(pair, "a")
            whole = _sums(p_bracket(pair, params))
            reduced = params.after_a()
            res.checked += 1
            below = _sums(p_bracket(shorter, reduced))
            if any(below[k - 1] + a1 + big_a > whole[k] for k in range(1, params.N + params.M + 1)):
                res.fail(("lower", pair, params))
            for e in range(4):
                raised = Params(reduced.N, reduced.M, reduced.A, reduced.B + Fraction(e, 2) * s, s)
                sums = _sums(p_bracket(shorter, raised))
                for k in range(1, params.N + params.M):
                    res.checked += 1
                    b = b_count(shorter, raised, k)
                    bound = sums[k] + (a1 + big_a - big_b - s + b * s * (1 - Fraction(e, 2)) if b >= 1 else 0)
                    if bound > whole[k]:
                        res.fail(("raised", pair, params, e, k, b))
        if tried:
            instances += 1
    return res


ALL_SWEEPS = {
    "oracle": mult_oracle,
    "symbol-dominance": symbol_dominance,
    "multiplicity-support": multiplicity_support,
    "max": max_constituents,
    "min": min_constituents,
    "bar": recursion_matches_max,
    "k": recursion_keeps_k,
    "half-sequences": half_sequences,
    "bijection": springer_bijection,
    "dominance-transfer": dominance_transfer,
    "bounds": partial_sum_bounds,
    "half-step": half_step,
}
