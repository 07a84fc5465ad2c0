"""Partial Brauer partitions and the diagram product.

A partition of ``[n] u [n]'`` into blocks of size at most two is stored as a
partner tuple of length ``2n``: upper vertex ``i`` lives at index ``i - 1``,
lower vertex ``i'`` at index ``n + i - 1``, and ``partner[v]`` is the index
of the other vertex in ``v``'s block or ``-1`` for a singleton.

The external notation uses signed integers: ``i`` for the upper vertex and
``-i`` for the lower vertex ``i'``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

NONE = -1


class PartitionError(ValueError):
    """Malformed block list or partner mapping."""


class DimensionError(ValueError):
    """Operands live on different ground sets."""


@dataclass(frozen=True)
class Partition:
    n: int
    partner: tuple

    def __post_init__(self):
        if self.n < 0:
            raise PartitionError(f"negative ground size {self.n}")
        if len(self.partner) != 2 * self.n:
            raise PartitionError(
                f"partner mapping has length {len(self.partner)}, expected {2 * self.n}")
        for v, w in enumerate(self.partner):
            if w == NONE:
                continue
            if not 0 <= w < 2 * self.n:
                raise PartitionError(f"partner index {w} out of range")
            if w == v:
                raise PartitionError(f"vertex {_label(v, self.n)} is its own partner")
            if self.partner[w] != v:
                raise PartitionError(
                    f"partner mapping not symmetric at {_label(v, self.n)}")

    # -- convenience --------------------------------------------------------

    def __repr__(self):
        return f"Partition({format_partition(self)!r})"

    def __mul__(self, other):
        return product(self, other)

    @cached_property
    def stats(self) -> "PartitionStats":
        return stats(self)

    @property
    def rank(self) -> int:
        n = self.n
        return sum(1 for v in range(n) if self.partner[v] >= n)

    def blocks(self) -> list:
        return to_blocks(self)


def _label(v: int, n: int) -> int:
    """Internal index -> signed external vertex."""
    return v + 1 if v < n else -(v - n + 1)


def _index(x: int, n: int) -> int:
    if 1 <= x <= n:
        return x - 1
    if -n <= x <= -1:
        return n - x - 1
    raise PartitionError(f"vertex {x} outside [-{n},-1] u [1,{n}]")


def from_blocks(n: int, blocks: Iterable[Sequence[int]]) -> Partition:
    """Build a partition from signed-integer blocks; every vertex must be covered once."""
    if n < 0:
        raise PartitionError(f"negative ground size {n}")
    partner = [NONE] * (2 * n)
    seen = [False] * (2 * n)
    for block in blocks:
        block = list(block)
        if not 1 <= len(block) <= 2:
            raise PartitionError(f"block {block} has size {len(block)}; sizes 1 and 2 only")
        idx = []
        for x in block:
            if isinstance(x, bool) or not isinstance(x, int):
                raise PartitionError(f"block {block}: non-integer vertex {x!r}")
            try:
                i = _index(x, n)
            except PartitionError as exc:
                raise PartitionError(f"block {block}: {exc}") from None
            if seen[i]:
                raise PartitionError(f"block {block}: vertex {x} occurs in two blocks")
            seen[i] = True
            idx.append(i)
        if len(idx) == 2:
            a, b = idx
            partner[a], partner[b] = b, a
    missing = [_label(i, n) for i in range(2 * n) if not seen[i]]
    if missing:
        raise PartitionError(f"vertices {missing} are not covered by any block")
    return Partition(n, tuple(partner))


def to_blocks(p: Partition) -> list:
    """Canonical block list: blocks ordered by least vertex under 1<..<n<1'<..<n'."""
    n = p.n
    out = []
    for v in range(2 * n):
        w = p.partner[v]
        if w == NONE:
            out.append([_label(v, n)])
        elif v < w:
            out.append([_label(v, n), _label(w, n)])
    return out


def identity(n: int) -> Partition:
    return Partition(n, tuple(list(range(n, 2 * n)) + list(range(n))))


def from_permutation(perm: Sequence[int]) -> Partition:
    """Permutation of ``[n]`` given 1-based as ``perm[i-1] = image of i``.

    The result has transversals ``{i, perm(i)'}``, so that the product of two
    permutation diagrams is the composite "first g, then h".
    """
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise PartitionError(f"{list(perm)} is not a bijection on [1..{n}]")
    partner = [NONE] * (2 * n)
    for i, j in enumerate(perm):
        partner[i] = n + j - 1
        partner[n + j - 1] = i
    return Partition(n, tuple(partner))


def to_permutation(p: Partition) -> list:
    """Inverse of :func:`from_permutation`; fails unless ``p`` has full rank."""
    n = p.n
    if p.rank != n:
        raise PartitionError("not a unit: rank is below n")
    return [p.partner[i] - n + 1 for i in range(n)]


def reflect(p: Partition) -> Partition:
    """Swap the two rows (x <-> x')."""
    n = p.n

    def sw(v):
        if v == NONE:
            return NONE
        return v + n if v < n else v - n

    return Partition(n, tuple(sw(p.partner[sw(v)]) for v in range(2 * n)))


def product(a: Partition, b: Partition) -> Partition:
    """Diagram product ``ab``: stack ``a`` on top of ``b`` and trace paths.

    Every middle vertex carries at most one edge from each factor, so the
    components of the product graph are alternating paths and cycles; each
    outer vertex is traced to the far end of its path.
    """
    if a.n != b.n:
        raise DimensionError(f"cannot multiply PB_{a.n} by PB_{b.n}")
    n = a.n
    pa, pb = a.partner, b.partner
    res = [NONE] * (2 * n)

    def trace(mid, in_a):
        # Arrived at middle vertex `mid` (0-based) via an edge of the factor
        # opposite to `in_a`; continue in factor a (lower side) or b (upper side).
        while True:
            if in_a:
                w = pa[n + mid]
                if w == NONE:
                    return NONE
                if w < n:
                    return w
                mid = w - n
                in_a = False
            else:
                w = pb[mid]
                if w == NONE:
                    return NONE
                if w >= n:
                    return w
                mid = w
                in_a = True

    for v in range(n):
        if res[v] != NONE:
            continue
        w = pa[v]
        if w == NONE:
            end = NONE
        elif w < n:
            end = w
        else:
            end = trace(w - n, False)
        if end != NONE:
            res[v], res[end] = end, v
    for v in range(n, 2 * n):
        if res[v] != NONE:
            continue
        w = pb[v]
        if w == NONE:
            end = NONE
        elif w >= n:
            end = w
        else:
            end = trace(w, True)
        if end != NONE:
            res[v], res[end] = end, v
    return Partition(n, tuple(res))


def product_many(*factors: Partition) -> Partition:
    it = iter(factors)
    acc = next(it)
    for f in it:
        acc = product(acc, f)
    return acc


@dataclass(frozen=True)
class PartitionStats:
    rank: int
    dom: frozenset
    codom: frozenset
    ker_classes: tuple
    coker_classes: tuple
    upper_nontransversals: frozenset
    lower_nontransversals: frozenset
    ker_singletons: int
    coker_singletons: int

    # short aliases used throughout the classification code
    @property
    def k(self) -> int:
        return self.ker_singletons

    @property
    def p(self) -> int:
        return self.coker_singletons


def _row_classes(partner, offset, n):
    classes = []
    for i in range(n):
        w = partner[offset + i]
        if offset <= w < offset + n:
            j = w - offset
            if i < j:
                classes.append((i + 1, j + 1))
        else:
            classes.append((i + 1,))
    return tuple(sorted(classes))


def stats(p: Partition) -> PartitionStats:
    n = p.n
    pt = p.partner
    dom = frozenset(i + 1 for i in range(n) if pt[i] >= n)
    codom = frozenset(pt[i] - n + 1 for i in range(n) if pt[i] >= n)
    ker = _row_classes(pt, 0, n)
    coker = _row_classes(pt, n, n)
    nu = frozenset(frozenset(c) for c in ker if not (len(c) == 1 and c[0] in dom))
    nl = frozenset(frozenset(c) for c in coker if not (len(c) == 1 and c[0] in codom))
    return PartitionStats(
        rank=len(dom),
        dom=dom,
        codom=codom,
        ker_classes=ker,
        coker_classes=coker,
        upper_nontransversals=nu,
        lower_nontransversals=nl,
        ker_singletons=sum(1 for c in ker if len(c) == 1),
        coker_singletons=sum(1 for c in coker if len(c) == 1),
    )


def leq_R_natural(s: Partition, t: Partition) -> bool:
    """``s <=_R t`` in PB_n, i.e. the upper non-transversals of s contain those of t."""
    if s.n != t.n:
        raise DimensionError(f"cannot compare PB_{s.n} with PB_{t.n}")
    return s.stats.upper_nontransversals >= t.stats.upper_nontransversals


def leq_L_natural(s: Partition, t: Partition) -> bool:
    """Dual of :func:`leq_R_natural` on the lower row."""
    if s.n != t.n:
        raise DimensionError(f"cannot compare PB_{s.n} with PB_{t.n}")
    return s.stats.lower_nontransversals >= t.stats.lower_nontransversals


# -- text format ---------------------------------------------------------------

_TEXT = re.compile(r"^\s*(\d+)\s*;\s*(\[.*\])\s*$", re.S)


def parse_partition(text: str) -> Partition:
    """Parse ``"n; [[1,5],[2],[3,-2],...]"``."""
    m = _TEXT.match(text)
    if not m:
        raise PartitionError(f"cannot parse partition {text!r}; expected 'n; [[...], ...]'")
    n = int(m.group(1))
    try:
        blocks = json.loads(m.group(2))
    except json.JSONDecodeError as exc:
        raise PartitionError(f"bad block list {m.group(2)!r}: {exc.msg}") from None
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise PartitionError(f"block list must be a list of lists, got {m.group(2)!r}")
    return from_blocks(n, blocks)


def format_partition(p: Partition) -> str:
    body = ",".join("[" + ",".join(str(x) for x in b) + "]" for b in to_blocks(p))
    return f"{p.n};[{body}]"
