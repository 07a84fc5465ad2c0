"""PB-pairs (half diagrams) and their joins.

A PB-pair on ``[n]`` is a 1-2-equivalence together with a set of "domain"
points, each of which must sit in a singleton class.  Internally points are
0-based; the text format and all reported paths/pairs are 1-based.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .pb_core import NONE, DimensionError, Partition, PartitionError


class UndefinedPairError(ValueError):
    """``(eps_{m,k}, [t])`` does not describe a PB-pair."""


@dataclass(frozen=True)
class PBPair:
    n: int
    eq: tuple           # partner of each point, NONE for singletons
    domain: frozenset   # 0-based points

    def __post_init__(self):
        if len(self.eq) != self.n:
            raise PartitionError(f"equivalence has length {len(self.eq)}, expected {self.n}")
        for i, j in enumerate(self.eq):
            if j == NONE:
                continue
            if not 0 <= j < self.n or j == i or self.eq[j] != i:
                raise PartitionError(f"not a 1-2-equivalence at point {i + 1}")
        for x in self.domain:
            if not 0 <= x < self.n:
                raise PartitionError(f"domain point {x + 1} outside [1,{self.n}]")
            if self.eq[x] != NONE:
                raise PartitionError(f"domain point {x + 1} is not a singleton class")

    @property
    def rank(self) -> int:
        return len(self.domain)

    def doubles(self) -> list:
        return [[i + 1, j + 1] for i, j in enumerate(self.eq) if j != NONE and i < j]

    def singletons(self) -> list:
        return [i + 1 for i, j in enumerate(self.eq) if j == NONE]

    def __str__(self):
        return format_pb_pair(self)


def pb_pair(n: int, doubles: Iterable[Sequence[int]] = (), domain: Iterable[int] = ()) -> PBPair:
    """Build a PB-pair from 1-based doubles and domain points."""
    eq = [NONE] * n
    for d in doubles:
        if len(d) != 2:
            raise PartitionError(f"class {list(d)} must have exactly two points")
        a, b = d
        for x in (a, b):
            if not 1 <= x <= n:
                raise PartitionError(f"point {x} outside [1,{n}]")
            if eq[x - 1] != NONE or a == b:
                raise PartitionError(f"point {x} occurs in two classes")
        eq[a - 1], eq[b - 1] = b - 1, a - 1
    dom = []
    for x in domain:
        if not 1 <= x <= n:
            raise PartitionError(f"domain point {x} outside [1,{n}]")
        dom.append(x - 1)
    if len(set(dom)) != len(dom):
        raise PartitionError("repeated domain point")
    return PBPair(n, tuple(eq), frozenset(dom))


def epsilon_pair(m: int, k: int, t: int) -> PBPair:
    """``(eps_{m,k}, [t])``: singletons 1..k, then doubles {k+1,k+2}, ..., domain [t]."""
    if m < 0 or k < 0 or t < 0 or k > m or (m - k) % 2 or t > k:
        raise UndefinedPairError(f"(eps_{{{m},{k}}}, [{t}]) is not a PB-pair")
    eq = [NONE] * m
    for a in range(k, m, 2):
        eq[a], eq[a + 1] = a + 1, a
    return PBPair(m, tuple(eq), frozenset(range(t)))


def halves(p: Partition) -> tuple:
    """``(ker, dom)`` and ``(coker, codom)`` of a partition, as PB-pairs."""
    n = p.n
    pt = p.partner
    up, dom, low, codom = [NONE] * n, set(), [NONE] * n, set()
    for i in range(n):
        w = pt[i]
        if w == NONE:
            pass
        elif w < n:
            up[i] = w
        else:
            dom.add(i)
            codom.add(w - n)
        w = pt[n + i]
        if w != NONE and w >= n:
            low[i] = w - n
    return PBPair(n, tuple(up), frozenset(dom)), PBPair(n, tuple(low), frozenset(codom))


def partition_from_halves(upper: PBPair, lower: PBPair,
                          pairing: Optional[dict] = None) -> Partition:
    """Glue two half diagrams into a partition.

    ``pairing`` maps each upper domain point (0-based) to a lower domain point;
    by default the domains are matched in increasing order.
    """
    if upper.n != lower.n:
        raise DimensionError(f"halves on [{upper.n}] and [{lower.n}]")
    if upper.rank != lower.rank:
        raise PartitionError(f"domain sizes differ: {upper.rank} vs {lower.rank}")
    n = upper.n
    if pairing is None:
        pairing = dict(zip(sorted(upper.domain), sorted(lower.domain)))
    if set(pairing) != set(upper.domain) or set(pairing.values()) != set(lower.domain):
        raise PartitionError("pairing is not a bijection between the two domains")
    pt = [NONE] * (2 * n)
    for i in range(n):
        if upper.eq[i] != NONE:
            pt[i] = upper.eq[i]
        if lower.eq[i] != NONE:
            pt[n + i] = n + lower.eq[i]
    for x, y in pairing.items():
        pt[x], pt[n + y] = n + y, x
    return Partition(n, tuple(pt))


@dataclass(frozen=True)
class JoinResult:
    joined_eq: tuple      # classes of eq1 v eq2, 1-based, sorted
    domain_pairs: tuple   # Z as sorted 1-based (x, y) pairs
    rank: int
    paths: tuple          # one 1-based vertex sequence per element of Z


def _trace_from(u: int, eq1, eq2) -> list:
    # u has no eq1 edge; alternate eq2, eq1, ... until the path stops
    path = [u]
    use2 = True
    v = u
    while True:
        w = (eq2 if use2 else eq1)[v]
        if w == NONE:
            return path
        path.append(w)
        v = w
        use2 = not use2


def join_rank(p1: PBPair, p2: PBPair) -> int:
    """``|Z|`` for the join, without building the joined equivalence."""
    if p1.n != p2.n:
        raise DimensionError(f"PB-pairs on [{p1.n}] and [{p2.n}]")
    eq1, eq2, x2 = p1.eq, p2.eq, p2.domain
    count = 0
    for u in p1.domain:
        v = u
        use2 = True
        while True:
            w = (eq2 if use2 else eq1)[v]
            if w == NONE:
                break
            v = w
            use2 = not use2
        if v in x2:
            count += 1
    return count


def domain_paths(p1: PBPair, p2: PBPair) -> list:
    """Paths ``u -eq2- w1 -eq1- ... -eq1- v`` with ``u`` in X1 and ``v`` in X2, sorted by ``u``."""
    if p1.n != p2.n:
        raise DimensionError(f"PB-pairs on [{p1.n}] and [{p2.n}]")
    out = []
    for u in sorted(p1.domain):
        path = _trace_from(u, p1.eq, p2.eq)
        if path[-1] in p2.domain:
            out.append([v + 1 for v in path])
    return out


def join(p1: PBPair, p2: PBPair) -> JoinResult:
    if p1.n != p2.n:
        raise DimensionError(f"PB-pairs on [{p1.n}] and [{p2.n}]")
    n = p1.n
    comp = [NONE] * n
    classes = []
    for s in range(n):
        if comp[s] != NONE:
            continue
        cid = len(classes)
        stack, members = [s], []
        comp[s] = cid
        while stack:
            v = stack.pop()
            members.append(v)
            for w in (p1.eq[v], p2.eq[v]):
                if w != NONE and comp[w] == NONE:
                    comp[w] = cid
                    stack.append(w)
        classes.append(tuple(sorted(v + 1 for v in members)))
    z = sorted((x + 1, y + 1) for x in p1.domain for y in p2.domain if comp[x] == comp[y])
    paths = domain_paths(p1, p2)
    return JoinResult(tuple(sorted(classes)), tuple(z), len(z), tuple(tuple(p) for p in paths))


# -- text format ---------------------------------------------------------------

_PAIR = re.compile(r"^\s*(\d+)\s*;\s*eq\s*=\s*(\[.*?\])\s*;\s*X\s*=\s*(\[.*?\])\s*$", re.S)


def parse_pb_pair(text: str) -> PBPair:
    """Parse ``"n; eq=[[3,8]]; X=[1,2,9]"`` (singletons implicit)."""
    m = _PAIR.match(text)
    if not m:
        raise PartitionError(f"cannot parse PB-pair {text!r}; expected 'n; eq=[[a,b],...]; X=[...]'")
    try:
        doubles = json.loads(m.group(2))
        dom = json.loads(m.group(3))
    except json.JSONDecodeError as exc:
        raise PartitionError(f"bad PB-pair {text!r}: {exc.msg}") from None
    return pb_pair(int(m.group(1)), doubles, dom)


def format_pb_pair(p: PBPair) -> str:
    eq = ",".join(f"[{a},{b}]" for a, b in p.doubles())
    dom = ",".join(str(x + 1) for x in sorted(p.domain))
    return f"{p.n}; eq=[{eq}]; X=[{dom}]"
