"""Multiplicities counted by flows of units between crossed indices.

A shift vector ``x`` has a non-negative integer per pair ``(p, q)`` with
``p`` before ``q`` and on different sides; it moves ``x[p, q]`` units from
``q`` to ``p``.  The multiplicity is the signed count of shift vectors
landing on twisted targets, summed over both symmetric groups.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .pab import IndexedPair, drop_first, swap_sides
from .partitions import check_partition, pad

Index = tuple[int, int]


def crossed_pairs(pair: IndexedPair) -> list[tuple[Index, Index]]:
    """The index set of shift vectors, as 1-based ``((i, side), (j, side))`` with the first earlier."""
    seq = _index_sequence(pair.order)
    return [(p, q) for a, p in enumerate(seq) for q in seq[a + 1 :] if p[1] != q[1]]


def _index_sequence(order: str) -> list[Index]:
    counts = [0, 0]
    out = []
    for c in order:
        side = 0 if c == "A" else 1
        counts[side] += 1
        out.append((counts[side], side))
    return out


def zero_shift(pair: IndexedPair) -> dict:
    return {key: 0 for key in crossed_pairs(pair)}


def shift_apply(pair: IndexedPair, x: dict) -> tuple[tuple, tuple]:
    keys = crossed_pairs(pair)
    if set(x) != set(keys):
        raise ValueError("shift vector keys must be exactly the crossed pairs of the order")
    if any(not isinstance(v, int) or v < 0 for v in x.values()):
        raise ValueError("shift vector entries must be non-negative ints")
    vals = [list(pair.alpha), list(pair.beta)]
    for (early, late), amount in x.items():
        vals[early[1]][early[0] - 1] += amount
        vals[late[1]][late[0] - 1] -= amount
    return tuple(vals[0]), tuple(vals[1])


def sign_of(w: tuple[int, ...]) -> int:
    sign, seen = 1, set()
    for start in range(len(w)):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = w[i] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def twist(seq: tuple, w: tuple[int, ...]) -> tuple:
    """``seq[w]_i = seq_{w(i)} + i - w(i)``; ``w`` is given 1-based as ``(w(1), ..., w(n))``."""
    if sorted(w) != list(range(1, len(seq) + 1)):
        raise ValueError(f"{w!r} is not a permutation of 1..{len(seq)}")
    return tuple(seq[w[i] - 1] + (i + 1) - w[i] for i in range(len(seq)))


def x_solution_count(pair: IndexedPair, nu_target: tuple, mu_target: tuple) -> int:
    """Number of shift vectors carrying ``(alpha, beta)`` onto the targets (integers, any sign).

    Sweeps the order from the latest index to the earliest: each index must
    shed its surplus over its target onto earlier indices of the other side.
    """
    if len(nu_target) != pair.n or len(mu_target) != pair.m:
        raise ValueError("targets must have the lengths of alpha and beta")
    seq = _index_sequence(pair.order)
    orig = [(pair.alpha, pair.beta)[side][i - 1] for i, side in seq]
    tgt = [(nu_target, mu_target)[side][i - 1] for i, side in seq]
    sides = [side for _, side in seq]
    if sum(orig) != sum(tgt):
        return 0
    run_o = run_t = 0
    for o, t in zip(orig, tgt):
        run_o += o
        run_t += t
        if run_o > run_t:
            return 0
    tgt_prefix = [0]
    for t in tgt:
        tgt_prefix.append(tgt_prefix[-1] + t)
    receivers = [tuple(q for q in range(p) if sides[q] != sides[p]) for p in range(len(seq))]

    @lru_cache(maxsize=None)
    def count(p: int, cur: tuple) -> int:
        if p < 0:
            return 1
        loss = cur[p] - tgt[p]
        if loss < 0:
            return 0
        head = cur[:p]
        if loss == 0:
            return count(p - 1, head) if _feasible(head) else 0
        recv = receivers[p]
        if not recv:
            return 0
        total = 0
        for split in _compositions(loss, len(recv)):
            new = list(head)
            for q, amount in zip(recv, split):
                new[q] += amount
            new = tuple(new)
            if _feasible(new):
                total += count(p - 1, new)
        return total

    def _feasible(head: tuple) -> bool:
        run = 0
        for t, v in enumerate(head):
            run += v
            if run > tgt_prefix[t + 1]:
                return False
        return True

    return count(len(seq) - 1, tuple(orig))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass
class MultResult:
    value: int
    audit: dict = field(default_factory=dict)


def mult_bruteforce(pair: IndexedPair, nu: tuple, mu: tuple) -> MultResult:
    """Signed sum over both symmetric groups; the audit maps ``(w, v)`` to each non-zero term."""
    nu = pad(check_partition(nu, "nu"), pair.n)
    mu = pad(check_partition(mu, "mu"), pair.m)
    value, audit = 0, {}
    if sum(nu) + sum(mu) != sum(pair.alpha) + sum(pair.beta):
        return MultResult(0, {})
    for w in permutations(range(1, pair.n + 1)):
        nu_w = twist(nu, w)
        sw = sign_of(w)
        for v in permutations(range(1, pair.m + 1)):
            c = x_solution_count(pair, nu_w, twist(mu, v))
            if c:
                term = sw * sign_of(v) * c
                audit[(w, v)] = term
                value += term
    return MultResult(value, audit)


def q_set(alpha1: int, target: int, mu: tuple) -> list[tuple]:
    """Partitions interlacing above ``mu`` whose size exceeds ``mu``'s by ``target - alpha1``."""
    mu = check_partition(mu, "mu")
    extra = target - alpha1
    if extra < 0:
        return []
    m = len(mu)
    if m == 0:
        return [()] if extra == 0 else []
    want = sum(mu) + extra
    out = []

    def tails(i):
        if i == m:
            yield ()
            return
        for v in range(mu[i - 1], mu[i] - 1, -1):
            for rest in tails(i + 1):
                yield (v,) + rest

    for tail in tails(1):
        head = want - sum(tail)
        if head >= mu[0]:
            out.append((head,) + tail)
    out.sort(reverse=True)
    return out


@lru_cache(maxsize=None)
def _mult_rec(alpha: tuple, beta: tuple, order: str, nu: tuple, mu: tuple) -> int:
    if sum(nu) + sum(mu) != sum(alpha) + sum(beta):
        return 0
    if not alpha or not beta:
        return int(nu == alpha and mu == beta)
    if order[0] == "B":
        flipped = swap_sides(IndexedPair(alpha, beta, order))
        return _mult_rec(flipped.alpha, flipped.beta, flipped.order, mu, nu)
    a1 = alpha[0]
    rest = drop_first(IndexedPair(alpha, beta, order), "a")
    total = 0
    for k in range(1, len(nu) + 1):
        target = nu[k - 1] + 1 - k
        if target < a1:
            continue
        nu_rest = tuple(v + 1 for v in nu[: k - 1]) + nu[k:]
        sub = 0
        for mu_new in q_set(a1, target, mu):
            sub += _mult_rec(rest.alpha, rest.beta, rest.order, nu_rest, mu_new)
        total += sub if k % 2 == 1 else -sub
    return total


def mult_recursive(pair: IndexedPair, nu: tuple, mu: tuple) -> int:
    """Same value as ``mult_bruteforce``, by peeling off the earliest index."""
    nu = pad(check_partition(nu, "nu"), pair.n)
    mu = pad(check_partition(mu, "mu"), pair.m)
    return _mult_rec(pair.alpha, pair.beta, pair.order, nu, mu)

