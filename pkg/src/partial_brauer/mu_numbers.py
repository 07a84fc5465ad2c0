"""Counting sequences for PB_n and its variants.

``a(k)`` counts involutions of a k-set (so ``|PB_n| = a(2n)``) and
``mu(n, k, r, q)`` counts PB-pairs of rank q whose join with the fixed pair
``(eps_{n,k}, [r])`` still has rank q.  All arithmetic is on Python ints.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb

from .enumeration import DEFAULT_BOUNDS, EnumerationBounds, all_pb_pairs, check_bound
from .pb_pairs import UndefinedPairError, epsilon_pair, join_rank


class PreconditionError(ValueError):
    pass


_A = [1, 1]


def a_seq(k: int) -> int:
    if k < 0:
        raise ValueError(f"a(k) needs k >= 0, got {k}")
    while len(_A) <= k:
        m = len(_A)
        _A.append(_A[m - 1] + (m - 1) * _A[m - 2])
    return _A[k]


def pb_count(n: int) -> int:
    if n < 0:
        raise ValueError(f"|PB_n| needs n >= 0, got {n}")
    return a_seq(2 * n)


def double_factorial(m: int) -> int:
    """``m!!`` for odd ``m >= -1``; ``(-1)!! = 1``."""
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def closed_form(n: int) -> int:
    """Number of 1-2-equivalences on an n-set, summed over the number of doubles."""
    return sum(comb(n, 2 * i) * double_factorial(2 * i - 1) for i in range(n // 2 + 1))


def _valid(n, k, r):
    return n >= k >= r >= 0 and (n - k) % 2 == 0


@lru_cache(maxsize=None)
def _mu(n, k, r, q):
    if q < 0 or not _valid(n, k, r):
        return 0
    if q == 0:
        return closed_form(n)
    if r < q:
        return 0
    return ((n - k) * _mu(n - 2, k, r, q)
            + _mu(n - 1, k - 1, r - 1, q - 1)
            + _mu(n - 1, k - 1, r - 1, q)
            + (k - r) * _mu(n - 2, k - 2, r - 1, q)
            + (r - 1) * _mu(n - 2, k - 2, r - 2, q))


def mu(n: int, k: int, r: int, q: int) -> int:
    """mu(n, k, r, q) from the five-term recurrence (0 outside its domain)."""
    return _mu(int(n), int(k), int(r), int(q))


class MuTable:
    """Memo of mu values; a thin dict in front of :func:`mu`.

    Inserts are idempotent (every value is a pure function of its key), so
    concurrent readers and writers can only ever store the same integer.
    """

    def __init__(self):
        self.memo = {}

    def __getitem__(self, key):
        n, k, r, q = key
        if q < 0 or not _valid(n, k, r) or r < q:
            return 0
        v = self.memo.get(key)
        if v is None:
            v = self.memo[key] = mu(n, k, r, q)
        return v

    def rows(self, max_n: int):
        """All ``(n, k, r, q, mu)`` with ``0 <= q <= r <= k <= n <= max_n`` and ``n = k (mod 2)``."""
        for n in range(max_n + 1):
            for k in range(n % 2, n + 1, 2):
                for r in range(k + 1):
                    for q in range(r + 1):
                        yield n, k, r, q, self[n, k, r, q]


@lru_cache(maxsize=None)
def _join_histogram(n, k, r, bounds):
    fixed = epsilon_pair(n, k, r)
    hist = Counter()
    for pair in all_pb_pairs(n, bounds):
        q = pair.rank
        if join_rank(fixed, pair) == q:
            hist[q] += 1
    return hist


def mu_bruteforce(n: int, k: int, r: int, q: int,
                  bounds: EnumerationBounds = DEFAULT_BOUNDS) -> int:
    """Count PB-pairs of rank q whose join with ``(eps_{n,k}, [r])`` has rank q, by enumeration."""
    if n < 0:
        return 0
    check_bound(n, bounds.max_n_pb_pairs, "brute-force mu")
    try:
        epsilon_pair(n, k, r)
    except UndefinedPairError:
        return 0
    return _join_histogram(n, k, r, bounds)[q]


def mu_bruteforce_swapped(n: int, k: int, r: int, q: int,
                          bounds: EnumerationBounds = DEFAULT_BOUNDS) -> int:
    """Same count with the fixed pair placed second in the join."""
    check_bound(n, bounds.max_n_pb_pairs, "brute-force mu")
    try:
        fixed = epsilon_pair(n, k, r)
    except UndefinedPairError:
        return 0
    return sum(1 for pair in all_pb_pairs(n, bounds)
               if pair.rank == q and join_rank(pair, fixed) == q)


def check_mu_inequality(n: int, k: int, r: int, q: int) -> bool:
    """Whether ``mu(n,k,r,q) > mu(n,k+2,r,q)``; only meaningful for ``r >= q >= 1``."""
    if not (n >= k >= r >= q >= 1 and (n - k) % 2 == 0 and n >= k + 2):
        raise PreconditionError(
            f"strict separation needs n>=k+2, k>=r>=q>=1, n=k mod 2; got {(n, k, r, q)}")
    return mu(n, k, r, q) > mu(n, k + 2, r, q)
