"""The generalized Springer correspondence between marked symplectic
partitions and pairs of partitions indexed by an integer ``k``.

``r`` is a working rank: results do not depend on it once it is large
enough, and ``r = N`` always is.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .pab import Params, symbol_of
from .partitions import (
    MarkedSymplectic,
    arith_progression,
    as_rat,
    check_partition,
    enumerate_marked,
    is_partition,
    jord_bp,
    pad,
    partial_sum,
    pointwise_add,
    pointwise_sub,
    sorted_union,
    transpose,
    trim,
)


def default_rank(ms: MarkedSymplectic) -> int:
    return ms.size // 2


def _check_rank(lam: tuple, r: int) -> None:
    if r < 0 or len(trim(lam)) > 2 * r:
        raise ValueError(f"rank r={r} too small for {lam!r}: need at most 2r parts")


def epsilon_on_indices(ms: MarkedSymplectic, r: int) -> tuple[int, ...]:
    """Sign attached to each of the ``2r + 1`` padded parts, ``+1`` on zeros."""
    _check_rank(ms.lam, r)
    eps = ms.epsilon
    return tuple(eps[x] if x else 1 for x in pad(ms.lam, 2 * r + 1))


def m_value(ms: MarkedSymplectic) -> int:
    odd_mult = [i for i in jord_bp(ms.lam) if ms.lam.count(i) % 2 == 1]
    eps = ms.epsilon
    return sum((-1) ** l for l, i in enumerate(odd_mult, start=1) if eps[i] == -1)


def k_of(ms: MarkedSymplectic) -> int:
    m = m_value(ms)
    return 2 * m if m >= 0 else -2 * m - 1


def block_sizes(k: int, r: int) -> tuple[int, int]:
    """Lengths ``(n, m)`` of ``alpha`` and ``beta`` at rank ``r``."""
    n, m = r + k // 2 + 1, r - k // 2
    if m < 0:
        raise ValueError(f"rank r={r} too small for k={k}")
    return n, m


def _sharp_by_parity_split(lam: tuple, r: int) -> tuple[tuple, tuple]:
    shifted = pointwise_add(pad(lam, 2 * r), arith_progression(2 * r - 1, 0, 1)) if r else ()
    evens = sorted((x // 2 for x in shifted if x % 2 == 0), reverse=True)
    odds = sorted(((x - 1) // 2 for x in shifted if x % 2 == 1), reverse=True)
    if len(evens) != r or len(odds) != r:
        raise AssertionError(f"parity split of {shifted!r} is unbalanced")
    a_sharp = pointwise_add(odds, arith_progression(r + 1, 2, 1)) + (0,)
    b_sharp = pointwise_add(evens, arith_progression(r, 1, 1))
    return a_sharp, b_sharp


def _sharp_by_cases(lam: tuple, r: int) -> tuple[tuple, tuple]:
    padded = pad(lam, 2 * r + 2)

    def part(i):
        return padded[i - 1] if i >= 1 else 0

    def one(cases):
        values = {v for ok, v in cases if ok}
        if len(values) != 1:
            raise AssertionError(f"case analysis for {lam!r} gave {values!r}")
        return values.pop()

    a_sharp = []
    for j in range(1, r + 2):
        base = 2 * r + 2 - 2 * j
        a_sharp.append(one([
            (part(2 * j - 1) % 2 == 0, part(2 * j - 1) // 2 + base),
            (part(2 * j) % 2 == 1 and partial_sum(padded, 2 * j) % 2 == 0, (part(2 * j) - 1) // 2 + base),
            (j >= 2 and part(2 * j - 2) % 2 == 1 and partial_sum(padded, 2 * j - 2) % 2 == 1,
             (part(2 * j - 2) + 1) // 2 + base),
        ]))
    b_sharp = []
    for j in range(1, r + 1):
        base = 2 * r + 1 - 2 * j
        b_sharp.append(one([
            (part(2 * j) % 2 == 0, part(2 * j) // 2 + base),
            (part(2 * j - 1) % 2 == 1 and partial_sum(padded, 2 * j - 1) % 2 == 1, (part(2 * j - 1) + 1) // 2 + base),
            (part(2 * j + 1) % 2 == 1 and partial_sum(padded, 2 * j + 1) % 2 == 0, (part(2 * j + 1) - 1) // 2 + base),
        ]))
    return tuple(a_sharp), tuple(b_sharp)


def sharp_symbols(lam: tuple, r: int) -> tuple[tuple, tuple]:
    """Unmarked symbols of ``lam`` at rank ``r``; two constructions, checked to agree."""
    lam = trim(check_partition(lam, "lambda"))
    _check_rank(lam, r)
    split = _sharp_by_parity_split(lam, r)
    cases = _sharp_by_cases(lam, r)
    if split != cases:
        raise AssertionError(f"sharp symbol constructions disagree for {lam!r}, r={r}: {split} vs {cases}")
    return split


def _runs(values: set[int]) -> list[tuple[int, ...]]:
    runs, current = [], []
    for v in sorted(values):
        if current and v == current[-1] + 1:
            current.append(v)
        else:
            if current:
                runs.append(tuple(current))
            current = [v]
    if current:
        runs.append(tuple(current))
    return runs


def marked_symbols(ms: MarkedSymplectic, r: int) -> tuple[tuple, tuple]:
    a_sharp, b_sharp = sharp_symbols(ms.lam, r)
    sa, sb = set(a_sharp), set(b_sharp)
    runs = [run for run in _runs(sa ^ sb) if 0 not in run]
    jord = sorted(jord_bp(ms.lam))
    if len(runs) != len(jord):
        raise AssertionError(f"{len(runs)} intervals for {len(jord)} even parts in {ms!r}")
    eps = ms.epsilon
    a_side, b_side = set(sa), set(sb)
    for part, run in zip(jord, runs):
        if eps[part] == -1:
            block = set(run)
            a_side = (a_side - (sa & block)) | (sb & block)
            b_side = (b_side - (sb & block)) | (sa & block)
    out = tuple(sorted(a_side, reverse=True)), tuple(sorted(b_side, reverse=True))
    if ms.is_even() and out != even_marked_symbols(ms, r):
        raise AssertionError(f"even-part formula disagrees for {ms!r}")
    return out


def even_marked_symbols(ms: MarkedSymplectic, r: int) -> tuple[tuple, tuple]:
    """Closed form of the marked symbols when every part is even."""
    if not ms.is_even():
        raise ValueError("closed form needs all parts even")
    eps = epsilon_on_indices(ms, r)
    lam = pad(ms.lam, 2 * r + 1)
    a_side, b_side = [], []
    for j in range(1, 2 * r + 2):
        entry = lam[j - 1] // 2 + 2 * r + 1 - j
        (a_side if eps[j - 1] == (-1) ** (j + 1) else b_side).append(entry)
    return tuple(a_side), tuple(b_side)


def even_m_value(ms: MarkedSymplectic, r: int) -> int:
    """Index-wise formula for ``m_value`` valid when every part is even."""
    eps = epsilon_on_indices(ms, r)
    return sum((-1) ** (j + 1) * (eps[j - 1] - 1) // 2 for j in range(1, 2 * r + 2))


@dataclass(frozen=True)
class SpringerDatum:
    k: int
    alpha: tuple
    beta: tuple
    r: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_partition(self.alpha, "alpha"))
        object.__setattr__(self, "beta", check_partition(self.beta, "beta"))
        if self.k < 0:
            raise ValueError("k must be non-negative")
        n, m = block_sizes(self.k, self.r)
        if (len(self.alpha), len(self.beta)) != (n, m):
            raise ValueError(f"alpha, beta must have lengths ({n}, {m}) at k={self.k}, r={self.r}")

    @property
    def size(self) -> int:
        """``N``, half the size of the symplectic partition."""
        return sum(self.alpha) + sum(self.beta) + self.k * (self.k + 1) // 2

    def at_rank(self, r: int) -> SpringerDatum:
        n, m = block_sizes(self.k, r)
        return SpringerDatum(self.k, pad(self.alpha, n), pad(self.beta, m), r)

    def trimmed(self) -> tuple[int, tuple, tuple]:
        return self.k, trim(self.alpha), trim(self.beta)

    def params(self) -> Params:
        """Symbol parameters of the associated shuffle order."""
        n, m = len(self.alpha), len(self.beta)
        return Params(n, m, 2 * self.r + self.k, 2 * self.r - self.k - 1, 2)


def pair_symbols(sd: SpringerDatum) -> tuple[tuple, tuple]:
    r, k = sd.r, sd.k
    from_alpha = pointwise_add(sd.alpha, arith_progression(2 * r + k, k % 2, 2))
    from_beta = pointwise_add(sd.beta, arith_progression(2 * r - 1 - k, 1 - k % 2, 2))
    if k % 2 == 0:
        return from_alpha, from_beta
    return from_beta, from_alpha


def springer_to_pair(ms: MarkedSymplectic, r: int | None = None) -> SpringerDatum:
    r = default_rank(ms) if r is None else r
    a_side, b_side = marked_symbols(ms, r)
    k = k_of(ms)
    n, m = block_sizes(k, r)
    alpha_side, beta_side = (a_side, b_side) if k % 2 == 0 else (b_side, a_side)
    if (len(alpha_side), len(beta_side)) != (n, m):
        raise ValueError(f"rank r={r} too small for {ms!r}")
    alpha = pointwise_sub(alpha_side, arith_progression(2 * r + k, k % 2, 2))
    beta = pointwise_sub(beta_side, arith_progression(2 * r - 1 - k, 1 - k % 2, 2))
    if not (is_partition(alpha) and is_partition(beta)):
        raise ValueError(f"rank r={r} too small for {ms!r}")
    sd = SpringerDatum(k, alpha, beta, r)
    if pair_symbols(sd) != (a_side, b_side):
        raise AssertionError(f"round trip through the symbols failed for {ms!r}")
    return sd


@lru_cache(maxsize=None)
def _symbol_index(two_n: int, r: int) -> dict:
    index = {}
    for ms in enumerate_marked(two_n):
        key = (k_of(ms), marked_symbols(ms, r))
        if key in index:
            raise AssertionError(f"{ms!r} and {index[key]!r} share the symbols {key!r}")
        index[key] = ms
    return index


def _even_inverse(sd: SpringerDatum) -> MarkedSymplectic | None:
    a_side, b_side = pair_symbols(sd)
    merged = sorted_union(a_side, b_side)
    if len(set(merged)) != len(merged):
        return None
    r = sd.r
    in_a = set(a_side)
    lam, signs = [], {}
    for j, entry in enumerate(merged, start=1):
        part = 2 * (entry - 2 * r - 1 + j)
        sign = (-1) ** (j + 1) if entry in in_a else (-1) ** j
        if part < 0:
            return None
        if part == 0:
            if sign != 1:
                return None
            continue
        if signs.setdefault(part, sign) != sign:
            return None
        lam.append(part)
    if not is_partition(lam):
        return None
    ms = MarkedSymplectic(tuple(lam), tuple(signs.items()))
    if 2 * ms.size != 2 * sd.size or k_of(ms) != sd.k or marked_symbols(ms, r) != (a_side, b_side):
        return None
    return ms


def pair_to_springer(sd: SpringerDatum) -> MarkedSymplectic:
    fast = _even_inverse(sd)
    if fast is not None:
        return fast
    two_n = 2 * sd.size
    r = max(sd.r, two_n // 2)
    wide = sd.at_rank(r)
    found = _symbol_index(two_n, r).get((sd.k, pair_symbols(wide)))
    if found is None:
        raise AssertionError(f"no marked partition matches {sd!r}")
    return found


def sign_twist(ms: MarkedSymplectic) -> MarkedSymplectic:
    sd = springer_to_pair(ms)
    n, m = len(sd.alpha), len(sd.beta)
    twisted = SpringerDatum(sd.k, pad(transpose(sd.beta), n), pad(transpose(sd.alpha), m), sd.r)
    return pair_to_springer(twisted)


def order_from_pair(sd: SpringerDatum) -> str:
    """Shuffle word read off the merged symbol, largest entry first."""
    row_a, row_b = symbol_of((sd.alpha, sd.beta), sd.params())
    tagged = sorted([(v, "A") for v in row_a] + [(v, "B") for v in row_b], reverse=True)
    values = [v for v, _ in tagged]
    if len(set(values)) != len(values):
        raise ValueError(f"merged symbol of {sd!r} has a repeated entry")
    return "".join(side for _, side in tagged)


def u_v_sequences(ms: MarkedSymplectic, r: int | None = None) -> tuple[tuple, tuple]:
    sd = springer_to_pair(ms, r)
    big_a, big_b = 2 * sd.r + sd.k, 2 * sd.r - sd.k - 1
    half = Fraction(1, 2)
    u = pointwise_add(pad(sd.alpha, big_a + 1), arith_progression(Fraction(big_a, 2), 0, half))
    v = pointwise_add(pad(sd.beta, big_b + 1), arith_progression(Fraction(big_b, 2), 0, half))
    return u, v


def doubled_union(u: tuple, v: tuple) -> tuple:
    return sorted_union((as_rat(2 * x) for x in u), (as_rat(2 * x) for x in v))
