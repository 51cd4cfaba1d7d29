"""Exact rational sequences, partitions and the dominance order.

Sequences are plain tuples.  Entries are ints or ``fractions.Fraction``;
``as_rat`` collapses integral fractions back to ``int`` so equal values
compare and hash the same whichever form produced them.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence, Union

Rat = Union[int, Fraction]


def as_rat(x) -> Rat:
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, str):
        return as_rat(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


def is_weakly_decreasing(seq: Sequence) -> bool:
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def is_partition(seq: Sequence) -> bool:
    """Weakly decreasing, non-negative integers (trailing zeros allowed)."""
    return (
        all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in seq)
        and is_weakly_decreasing(seq)
    )


def check_partition(seq: Sequence, what: str = "partition") -> tuple:
    seq = tuple(seq)
    if not is_partition(seq):
        raise ValueError(f"{what} must be a weakly decreasing tuple of non-negative ints: {seq!r}")
    return seq


def trim(seq: Sequence) -> tuple:
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def pad(seq: Sequence, length: int) -> tuple:
    seq = tuple(seq)
    if len(seq) > length:
        if any(seq[length:]):
            raise ValueError(f"cannot fit {seq!r} into {length} entries")
        return seq[:length]
    return seq + (0,) * (length - len(seq))


def shape_eq(a: Sequence, b: Sequence) -> bool:
    """Equality up to trailing zeros."""
    return trim(a) == trim(b)


def size(seq: Sequence) -> Rat:
    return as_rat(sum(seq, 0))


def partial_sum(seq: Sequence, k: int) -> Rat:
    if k < 0 or k > len(seq):
        raise ValueError(f"prefix length {k} out of range for a sequence of length {len(seq)}")
    return as_rat(sum(seq[:k], 0))


def partial_sums(seq: Sequence) -> tuple:
    out, acc = [0], 0
    for x in seq:
        acc += x
        out.append(as_rat(acc))
    return tuple(out)


def dominance_leq(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        raise ValueError(f"dominance needs equal lengths, got {len(a)} and {len(b)}")
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def partition_leq(a: Sequence, b: Sequence) -> bool:
    """Dominance between partitions of possibly different lengths (zero padded)."""
    length = max(len(a), len(b))
    return dominance_leq(pad(trim(a), length), pad(trim(b), length))


def partition_lt(a: Sequence, b: Sequence) -> bool:
    return trim(a) != trim(b) and partition_leq(a, b)


def sorted_union(a: Iterable, b: Iterable = ()) -> tuple:
    return tuple(sorted((as_rat(x) for x in (*a, *b)), reverse=True))


def pointwise_add(a: Sequence, b: Sequence) -> tuple:
    if len(a) != len(b):
        raise ValueError(f"pointwise addition needs equal lengths, got {len(a)} and {len(b)}")
    return tuple(as_rat(x + y) for x, y in zip(a, b))


def pointwise_sub(a: Sequence, b: Sequence) -> tuple:
    if len(a) != len(b):
        raise ValueError(f"pointwise subtraction needs equal lengths, got {len(a)} and {len(b)}")
    return tuple(as_rat(x - y) for x, y in zip(a, b))


def arith_progression(start, stop, step) -> tuple:
    """``start, start - step, ..., stop``; empty when ``stop == start + step``."""
    start, stop, step = as_rat(start), as_rat(stop), as_rat(step)
    if step <= 0:
        raise ValueError("progression step must be positive")
    count = Fraction(start - stop) / step + 1
    if count.denominator != 1 or count < 0:
        raise ValueError(f"{stop} is not reachable from {start} in steps of {step}")
    return tuple(as_rat(start - i * step) for i in range(int(count)))


def transpose(p: Sequence, length: int | None = None) -> tuple:
    p = trim(check_partition(p))
    out = tuple(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1)) if p else ()
    return out if length is None else pad(out, length)


def multiplicity(p: Sequence, i: int) -> int:
    if i <= 0:
        raise ValueError("multiplicity is only asked for positive parts")
    return sum(1 for x in p if x == i)


def is_symplectic(p: Sequence) -> bool:
    if not is_partition(p):
        return False
    counts = Counter(x for x in p if x > 0)
    return all(c % 2 == 0 for part, c in counts.items() if part % 2 == 1)


def jord_bp(p: Sequence) -> tuple:
    """Even parts of ``p``, distinct, in decreasing order."""
    return tuple(sorted({x for x in p if x > 0 and x % 2 == 0}, reverse=True))


def _partitions(total: int, largest: int) -> Iterator[tuple]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def partitions_of(total: int, max_part: int | None = None) -> Iterator[tuple]:
    """Partitions of ``total`` in lexicographically decreasing order."""
    if total < 0:
        raise ValueError("cannot partition a negative number")
    yield from _partitions(total, total if max_part is None else max_part)


def partitions_fitting(total: int, length: int, max_part: int | None = None) -> Iterator[tuple]:
    """Partitions of ``total`` with at most ``length`` parts, zero padded to ``length``."""
    for p in partitions_of(total, max_part):
        if len(p) <= length:
            yield pad(p, length)


def enumerate_symplectic(two_n: int) -> list[tuple]:
    if two_n < 0 or two_n % 2:
        raise ValueError(f"symplectic partitions need an even non-negative size, got {two_n}")
    return [p for p in partitions_of(two_n) if is_symplectic(p)]


def enumerate_bipartitions(total: int, len_a: int, len_b: int) -> list[tuple[tuple, tuple]]:
    if total < 0 or len_a < 0 or len_b < 0:
        raise ValueError("sizes and lengths must be non-negative")
    out = []
    for first in range(total, -1, -1):
        for a in partitions_fitting(first, len_a):
            for b in partitions_fitting(total - first, len_b):
                out.append((a, b))
    out.sort(key=lambda ab: (ab[0], ab[1]), reverse=True)
    return out


@dataclass(frozen=True)
class MarkedSymplectic:
    """A symplectic partition with a sign on each distinct even part.

    ``lam`` carries no trailing zeros; ``eps`` lists ``(part, sign)`` with
    parts decreasing.
    """

    lam: tuple
    eps: tuple = ()

    def __post_init__(self):
        lam = trim(check_partition(self.lam, "lambda"))
        if not is_symplectic(lam):
            raise ValueError(f"odd parts of a symplectic partition need even multiplicity: {lam!r}")
        eps = self.eps.items() if isinstance(self.eps, dict) else self.eps
        eps = tuple(sorted(((int(i), int(e)) for i, e in eps), reverse=True))
        if tuple(i for i, _ in eps) != jord_bp(lam):
            raise ValueError(f"signs must be given exactly on the even parts {jord_bp(lam)!r}, got {eps!r}")
        if any(e not in (1, -1) for _, e in eps):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "eps", eps)

    @property
    def epsilon(self) -> dict[int, int]:
        return dict(self.eps)

    @property
    def size(self) -> int:
        return sum(self.lam)

    def sign(self, part: int) -> int:
        return self.epsilon[part]

    def is_even(self) -> bool:
        return all(x % 2 == 0 for x in self.lam)


def enumerate_marked(two_n: int) -> list[MarkedSymplectic]:
    out = []
    for lam in enumerate_symplectic(two_n):
        jord = jord_bp(lam)
        for signs in product((1, -1), repeat=len(jord)):
            out.append(MarkedSymplectic(lam, tuple(zip(jord, signs))))
    return out
