"""Pairs of partitions under a shuffle order, and the two reduction procedures.

A shuffle order on ``{(i, 0)} ∪ {(j, 1)}`` is stored as a word over ``A``/``B``:
the i-th ``A`` is ``(i, 0)``, the j-th ``B`` is ``(j, 1)``, earliest first.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import (
    Rat,
    arith_progression,
    as_rat,
    check_partition,
    pad,
    pointwise_add,
    sorted_union,
)

A_SIDE, B_SIDE = 0, 1


def check_order(order: str, n: int, m: int) -> str:
    if not isinstance(order, str) or set(order) - {"A", "B"}:
        raise ValueError(f"order must be a word over A/B, got {order!r}")
    if order.count("A") != n or order.count("B") != m:
        raise ValueError(f"order {order!r} does not have {n} A's and {m} B's")
    return order


def positions(order: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """0-based word positions of the A's and of the B's."""
    pa = tuple(p for p, c in enumerate(order) if c == "A")
    pb = tuple(p for p, c in enumerate(order) if c == "B")
    return pa, pb


def precedes(order: str, left: tuple[int, int], right: tuple[int, int]) -> bool:
    """Whether ``left`` comes strictly before ``right``; both are 1-based ``(index, side)``."""
    pos = positions(order)
    return pos[left[1]][left[0] - 1] < pos[right[1]][right[0] - 1]


@dataclass(frozen=True)
class IndexedPair:
    alpha: tuple
    beta: tuple
    order: str

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_partition(self.alpha, "alpha"))
        object.__setattr__(self, "beta", check_partition(self.beta, "beta"))
        check_order(self.order, len(self.alpha), len(self.beta))

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def m(self) -> int:
        return len(self.beta)

    def a_first(self) -> bool:
        """``(1,0)`` precedes ``(1,1)``, vacuously true when a side is empty."""
        return not self.order or self.order[0] == "A"


@dataclass(frozen=True)
class Params:
    """Symbol parameters: row lengths ``N``, ``M`` and shifts ``A``, ``B`` with step ``s``."""

    N: int
    M: int
    A: Rat
    B: Rat
    s: Rat

    def __post_init__(self):
        for name in ("A", "B", "s"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        if self.N < 0 or self.M < 0:
            raise ValueError("row lengths must be non-negative")
        if self.s <= 0:
            raise ValueError("step must be positive")
        if self.A < self.s * (self.N - 1) or self.B < self.s * (self.M - 1):
            raise ValueError(f"shifts too small for the row lengths: {self}")

    def fits(self, n: int, m: int) -> bool:
        return self.N >= n and self.M >= m

    def check_fits(self, n: int, m: int) -> None:
        if not self.fits(n, m):
            raise ValueError(f"{self} cannot hold a pair of lengths ({n}, {m})")

    def after_a(self) -> Params:
        return Params(self.N - 1, self.M, self.A - self.s, self.B, self.s)

    def after_b(self) -> Params:
        return Params(self.N, self.M - 1, self.A, self.B - self.s, self.s)


def _residual(pair: IndexedPair, used_a: set[int], used_b: set[int]) -> IndexedPair:
    alpha, beta, word = [], [], []
    ia = ib = 0
    for c in pair.order:
        if c == "A":
            if ia not in used_a:
                alpha.append(pair.alpha[ia])
                word.append("A")
            ia += 1
        else:
            if ib not in used_b:
                beta.append(pair.beta[ib])
                word.append("B")
            ib += 1
    return IndexedPair(tuple(alpha), tuple(beta), "".join(word))


def _chain(pair: IndexedPair, start_side: int) -> tuple[int, list[int], list[int]]:
    """Alternating chain of earliest later elements starting at index 1 of ``start_side``."""
    pos = positions(pair.order)
    vals = (pair.alpha, pair.beta)
    chain: tuple[list[int], list[int]] = ([], [])
    side, idx = start_side, 0
    total = 0
    while True:
        chain[side].append(idx)
        total += vals[side][idx]
        here = pos[side][idx]
        other = 1 - side
        nxt = next((j for j, p in enumerate(pos[other]) if p > here), None)
        if nxt is None:
            break
        side, idx = other, nxt
    return total, chain[0], chain[1]


def step_a(pair: IndexedPair):
    """Procedure (a): returns ``(nu1, residual, (a_indices, b_indices))``, indices 1-based."""
    if pair.n == 0:
        raise ValueError("procedure (a) needs n >= 1")
    total, ca, cb = _chain(pair, A_SIDE)
    rest = _residual(pair, set(ca), set(cb))
    return total, rest, (tuple(i + 1 for i in ca), tuple(j + 1 for j in cb))


def step_b(pair: IndexedPair):
    """Procedure (b): returns ``(mu1, residual, (a_indices, b_indices))``, indices 1-based."""
    if pair.m == 0:
        raise ValueError("procedure (b) needs m >= 1")
    total, ca, cb = _chain(pair, B_SIDE)
    rest = _residual(pair, set(ca), set(cb))
    return total, rest, (tuple(i + 1 for i in ca), tuple(j + 1 for j in cb))


def _assemble_a(first, sub, n, m):
    nu, mu = sub
    return sorted_union((first,), nu) + (0,) * (n - len(nu) - 1), mu + (0,) * (m - len(mu))


def _assemble_b(first, sub, n, m):
    nu, mu = sub
    return nu + (0,) * (n - len(nu)), sorted_union((first,), mu) + (0,) * (m - len(mu) - 1)


@lru_cache(maxsize=None)
def _p_set(alpha: tuple, beta: tuple, order: str) -> frozenset:
    n, m = len(alpha), len(beta)
    if n == 0 and m == 0:
        return frozenset({((), ())})
    pair = IndexedPair(alpha, beta, order)
    out = set()
    if n:
        first, rest, _ = step_a(pair)
        for sub in _p_set(rest.alpha, rest.beta, rest.order):
            out.add(_assemble_a(first, sub, n, m))
    if m:
        first, rest, _ = step_b(pair)
        for sub in _p_set(rest.alpha, rest.beta, rest.order):
            out.add(_assemble_b(first, sub, n, m))
    return frozenset(out)


def p_set(pair: IndexedPair) -> frozenset:
    """All pairs reachable by repeatedly applying either procedure."""
    return _p_set(pair.alpha, pair.beta, pair.order)


def p_set_one_sided(pair: IndexedPair, side: str) -> frozenset:
    """Pairs whose first step is procedure ``side`` (``"a"`` or ``"b"``)."""
    if side == "a":
        first, rest, _ = step_a(pair)
        return frozenset(_assemble_a(first, sub, pair.n, pair.m) for sub in p_set(rest))
    if side == "b":
        first, rest, _ = step_b(pair)
        return frozenset(_assemble_b(first, sub, pair.n, pair.m) for sub in p_set(rest))
    raise ValueError(f"side must be 'a' or 'b', got {side!r}")


def allowed_procedures(pair: IndexedPair, A, B) -> tuple[bool, bool]:
    """Which of (a), (b) the shifts ``A``, ``B`` permit at the top level (needs n, m >= 1)."""
    if pair.n == 0 or pair.m == 0:
        raise ValueError("both sides must be non-empty")
    if pair.a_first():
        lhs = pair.alpha[0] + A
        return lhs >= B, lhs <= B
    lhs = pair.beta[0] + B
    return lhs <= A, lhs >= A


def _derive(pair: IndexedPair, A, B, s, chooser):
    """Yield ``(element, steps, base_pair)`` for derivations picked by ``chooser``.

    ``steps`` lists ``(procedure, value, A, B)`` with the shifts in force at
    that step; ``base_pair`` is the pair where one side ran out.
    """
    if pair.n == 0 or pair.m == 0:
        yield (pair.alpha, pair.beta), [], pair
        return
    ok_a, ok_b = allowed_procedures(pair, A, B)
    for proc in chooser(ok_a, ok_b):
        if proc == "a":
            first, rest, _ = step_a(pair)
            for sub, steps, base in _derive(rest, A - s, B, s, chooser):
                yield _assemble_a(first, sub, pair.n, pair.m), [("a", first, A, B)] + steps, base
        else:
            first, rest, _ = step_b(pair)
            for sub, steps, base in _derive(rest, A, B - s, s, chooser):
                yield _assemble_b(first, sub, pair.n, pair.m), [("b", first, A, B)] + steps, base


def _all_allowed(ok_a, ok_b):
    return [p for p, ok in (("a", ok_a), ("b", ok_b)) if ok]


def _prefer(flavor):
    other = "b" if flavor == "a" else "a"

    def choose(ok_a, ok_b):
        ok = {"a": ok_a, "b": ok_b}
        if not (ok_a or ok_b):
            raise AssertionError("neither procedure allowed")
        return [flavor] if ok[flavor] else [other]

    return choose


@lru_cache(maxsize=None)
def _p_constrained(alpha, beta, order, A, B, s) -> frozenset:
    pair = IndexedPair(alpha, beta, order)
    return frozenset(el for el, _, _ in _derive(pair, A, B, s, _all_allowed))


def p_constrained_set(pair: IndexedPair, params: Params) -> frozenset:
    """Elements reachable when each step must respect the shift inequalities."""
    params.check_fits(pair.n, pair.m)
    return _p_constrained(pair.alpha, pair.beta, pair.order, params.A, params.B, params.s)


def constrained_derivations(pair: IndexedPair, params: Params):
    """Every allowed derivation as ``(element, steps, base_pair)``."""
    params.check_fits(pair.n, pair.m)
    return list(_derive(pair, params.A, params.B, params.s, _all_allowed))


def canonical_derivation(pair: IndexedPair, params: Params, flavor: str):
    if flavor not in ("a", "b"):
        raise ValueError(f"flavor must be 'a' or 'b', got {flavor!r}")
    params.check_fits(pair.n, pair.m)
    (only,) = _derive(pair, params.A, params.B, params.s, _prefer(flavor))
    return only


def canonical_element(pair: IndexedPair, params: Params, flavor: str) -> tuple[tuple, tuple]:
    """The element obtained by always taking ``flavor`` whenever it is allowed."""
    return canonical_derivation(pair, params, flavor)[0]


def symbol_of(bp: tuple[tuple, tuple], params: Params) -> tuple[tuple, tuple]:
    nu, mu = bp
    params.check_fits(len(nu), len(mu))
    s = params.s
    row_a = pointwise_add(pad(nu, params.N), arith_progression(params.A, params.A + s - s * params.N, s))
    row_b = pointwise_add(pad(mu, params.M), arith_progression(params.B, params.B + s - s * params.M, s))
    return row_a, row_b


def merged_symbol(symbol: tuple[tuple, tuple]) -> tuple:
    return sorted_union(*symbol)


def merged_of(bp, params: Params) -> tuple:
    return merged_symbol(symbol_of(bp, params))


def p_bracket(pair: IndexedPair, params: Params) -> tuple:
    """Common merged symbol of the constrained set; checks that it is common."""
    merged = {merged_of(bp, params) for bp in p_constrained_set(pair, params)}
    if len(merged) != 1:
        raise AssertionError(f"constrained set has {len(merged)} distinct merged symbols for {pair}, {params}")
    return merged.pop()


@lru_cache(maxsize=None)
def _p_b_c(alpha, beta, order, c) -> frozenset:
    if not beta or c == 0:
        return _p_set(alpha, beta, order)
    pair = IndexedPair(alpha, beta, order)
    first, rest, _ = step_b(pair)
    return frozenset(
        _assemble_b(first, sub, pair.n, pair.m) for sub in _p_b_c(rest.alpha, rest.beta, rest.order, c - 1)
    )


def p_b_c_set(pair: IndexedPair, c: int) -> frozenset:
    """Elements whose first ``c`` steps are forced to be procedure (b)."""
    if c < 0:
        raise ValueError("c must be non-negative")
    return _p_b_c(pair.alpha, pair.beta, pair.order, c)


def iota(c: int, x: int, bp: tuple[tuple, tuple]) -> tuple[tuple, tuple]:
    """Insert a new first part ``x`` (plus a part borrowed from row b when ``c <= m``)."""
    nu, mu = bp
    m = len(mu)
    if c < 1:
        raise ValueError("c must be at least 1")
    if c <= m:
        new_nu = (x + mu[c - 1],) + tuple(nu)
        new_mu = tuple(mu[: c - 1]) + tuple(mu[c:]) + (0,)
        return new_nu, new_mu
    return (x,) + tuple(nu), tuple(mu)


def b_count(pair: IndexedPair, params: Params, k: int) -> int:
    """Largest share of row b among the ``k`` largest entries of the canonical (b) symbol."""
    total = params.N + params.M
    if not 0 <= k <= total:
        raise ValueError(f"k must lie in 0..{total}")
    row_a, row_b = symbol_of(canonical_element(pair, params, "b"), params)
    top = sorted_union(row_a, row_b)[:k]
    for b in range(min(k, params.M), -1, -1):
        a = k - b
        if a <= params.N and sorted_union(row_a[:a], row_b[:b]) == top:
            return b
    raise AssertionError("no split of the top entries between the rows")


def drop_first(pair: IndexedPair, side: str) -> IndexedPair:
    """Remove the first entry of one side, keeping the induced order."""
    if side == "a":
        if pair.n == 0:
            raise ValueError("alpha is empty")
        if pair.m and not pair.a_first():
            raise ValueError("(1,0) must precede (1,1) to drop the first entry of alpha")
        idx = pair.order.index("A")
        return IndexedPair(pair.alpha[1:], pair.beta, pair.order[:idx] + pair.order[idx + 1 :])
    if side == "b":
        if pair.m == 0:
            raise ValueError("beta is empty")
        idx = pair.order.index("B")
        return IndexedPair(pair.alpha, pair.beta[1:], pair.order[:idx] + pair.order[idx + 1 :])
    raise ValueError(f"side must be 'a' or 'b', got {side!r}")


def swap_sides(pair: IndexedPair) -> IndexedPair:
    return IndexedPair(pair.beta, pair.alpha, pair.order.translate(str.maketrans("AB", "BA")))


def pad_pair(pair: IndexedPair, n_new: int, m_new: int, order_ext: str) -> IndexedPair:
    """Zero-pad both sides, the new entries sitting where ``order_ext`` puts them.

    ``order_ext`` must restrict to the original order and keep every new
    entry after the last old entry of the other side.
    """
    n, m = pair.n, pair.m
    if n_new < n or m_new < m:
        raise ValueError("padding cannot shorten a side")
    check_order(order_ext, n_new, m_new)
    pa, pb = positions(order_ext)
    kept = sorted([pa[i] for i in range(n)] + [pb[j] for j in range(m)])
    if "".join(order_ext[p] for p in kept) != pair.order:
        raise ValueError("extended order does not restrict to the original one")
    if n_new > n and m >= 1 and not pa[n] > pb[m - 1]:
        raise ValueError("new alpha entries must come after the last beta entry")
    if m_new > m and n >= 1 and not pb[m] > pa[n - 1]:
        raise ValueError("new beta entries must come after the last alpha entry")
    return IndexedPair(pad(pair.alpha, n_new), pad(pair.beta, m_new), order_ext)


def bipartition_size(bp) -> Rat:
    return as_rat(sum(bp[0]) + sum(bp[1]))

