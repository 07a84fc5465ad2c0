"""Exhaustive generators for PB_n and for PB-pairs.

Both generators enumerate involutions by pairing the smallest unassigned
point either with nothing or with a larger unassigned point.  The order is
deterministic and, for partitions, agrees with the lexicographic order of
canonical block lists.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

from .pb_core import NONE, Partition
from .pb_pairs import PBPair


class BoundError(ValueError):
    """An enumeration or table would exceed the configured size cap."""


@dataclass(frozen=True)
class EnumerationBounds:
    max_n_full_monoid: int = 4
    max_n_pb_pairs: int = 9
    max_n_cayley: int = 4

    def __post_init__(self):
        for name in ("max_n_full_monoid", "max_n_pb_pairs", "max_n_cayley"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


DEFAULT_BOUNDS = EnumerationBounds()
HARD_MAX_N = 5          # |PB_5| = 9496; PB_6 has 140152 elements


def check_bound(n: int, limit: int, what: str):
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > limit:
        raise BoundError(f"{what} at n={n} exceeds the bound n<={limit}; raise --max-n to allow it")


def _involutions(size: int) -> Iterator[list]:
    """Partner lists (``NONE`` for fixed points) of all involutions of range(size)."""
    partner = [None] * size

    def rec(start):
        v = start
        while v < size and partner[v] is not None:
            v += 1
        if v == size:
            yield list(partner)
            return
        partner[v] = NONE
        yield from rec(v + 1)
        for w in range(v + 1, size):
            if partner[w] is None:
                partner[v], partner[w] = w, v
                yield from rec(v + 1)
                partner[w] = None
        partner[v] = None

    yield from rec(0)


def all_partitions(n: int, bounds: EnumerationBounds = DEFAULT_BOUNDS) -> Iterator[Partition]:
    check_bound(n, bounds.max_n_full_monoid, "enumerating PB_n")
    for pt in _involutions(2 * n):
        yield Partition(n, tuple(pt))


@lru_cache(maxsize=None)
def elements(n: int) -> tuple:
    """PB_n as a tuple in enumeration order (cached; element indices refer to it).

    Callers are expected to have checked their own bound; this only refuses
    sizes beyond ``HARD_MAX_N``.
    """
    check_bound(n, HARD_MAX_N, "caching PB_n")
    return tuple(Partition(n, tuple(pt)) for pt in _involutions(2 * n))


@lru_cache(maxsize=None)
def index_of(n: int) -> dict:
    return {p: i for i, p in enumerate(elements(n))}


def partitions_filtered(n: int, rank: Optional[int] = None,
                        ker_singletons: Optional[int] = None,
                        coker_singletons: Optional[int] = None,
                        bounds: EnumerationBounds = DEFAULT_BOUNDS) -> Iterator[Partition]:
    for p in all_partitions(n, bounds):
        st = p.stats
        if rank is not None and st.rank != rank:
            continue
        if ker_singletons is not None and st.ker_singletons != ker_singletons:
            continue
        if coker_singletons is not None and st.coker_singletons != coker_singletons:
            continue
        yield p


def all_pb_pairs(n: int, bounds: EnumerationBounds = DEFAULT_BOUNDS) -> Iterator[PBPair]:
    """Every PB-pair on ``[n]``: a 1-2-equivalence plus a set of its singletons."""
    check_bound(n, bounds.max_n_pb_pairs, "enumerating PB-pairs")
    for pt in _involutions(n):
        eq = tuple(pt)
        singles = [i for i in range(n) if pt[i] == NONE]
        for size in range(len(singles) + 1):
            for dom in combinations(singles, size):
                yield PBPair(n, eq, frozenset(dom))
