"""Variants ``PB_n^alpha`` with the sandwich product ``x * y = x alpha y``.

Everything here is computed from ranks and half diagrams only; the
table-based counterparts live in :mod:`partial_brauer.semigroup_analysis`
and are used as independent oracles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .enumeration import DEFAULT_BOUNDS, EnumerationBounds, check_bound, elements, index_of
from .mu_numbers import PreconditionError
from .pb_core import DimensionError, Partition, leq_L_natural, leq_R_natural, product
from .pb_pairs import halves

KINDS = ("R", "L", "H", "D", "J")


@dataclass(frozen=True)
class Variant:
    alpha: Partition
    n: Optional[int] = None
    r: int = field(init=False, compare=False)
    k: int = field(init=False, compare=False)
    p: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n is None:
            object.__setattr__(self, "n", self.alpha.n)
        if self.alpha.n != self.n:
            raise DimensionError(f"sandwich element lives in PB_{self.alpha.n}, not PB_{self.n}")
        st = self.alpha.stats
        object.__setattr__(self, "r", st.rank)
        object.__setattr__(self, "k", st.ker_singletons)
        object.__setattr__(self, "p", st.coker_singletons)

    def __call__(self, s, t):
        return sandwich_product(self, s, t)


def sandwich_product(v: Variant, s: Partition, t: Partition) -> Partition:
    if not s.n == t.n == v.n:
        raise DimensionError(f"operands in PB_{s.n}, PB_{t.n} for a variant of PB_{v.n}")
    return product(product(s, v.alpha), t)


@dataclass(frozen=True)
class PSets:
    p1: frozenset
    p2: frozenset
    p3: frozenset
    p: frozenset


def _elements(n, bounds):
    check_bound(n, bounds.max_n_full_monoid, "variant computations over PB_n")
    return elements(n)


@lru_cache(maxsize=None)
def _p_sets(v: Variant, bounds: EnumerationBounds) -> PSets:
    a = v.alpha
    p1, p2, p3 = set(), set(), set()
    for i, x in enumerate(_elements(v.n, bounds)):
        rx = x.rank
        if product(x, a).rank == rx:
            p1.add(i)
        if product(a, x).rank == rx:
            p2.add(i)
        if product(product(a, x), a).rank == rx:
            p3.add(i)
    p = p1 & p2
    if p != p3:
        raise RuntimeError(f"P != P3 for alpha = {a}")
    return PSets(frozenset(p1), frozenset(p2), frozenset(p3), frozenset(p))


def p_sets(v: Variant, bounds: EnumerationBounds = DEFAULT_BOUNDS) -> PSets:
    """P-sets from the rank characterisation: ``rank(x alpha) = rank x`` etc."""
    return _p_sets(v, bounds)


@dataclass(frozen=True)
class RegularDChain:
    classes: tuple          # D_0, ..., D_r as frozensets of element indices
    l_class_count: tuple
    r_class_count: tuple


def regular_d_chain(v: Variant, bounds: EnumerationBounds = DEFAULT_BOUNDS) -> RegularDChain:
    """The regular D-classes ``D_q = {x in P : rank x = q}``, q = 0..r, with class counts."""
    els = _elements(v.n, bounds)
    regular = p_sets(v, bounds).p
    classes = [set() for _ in range(v.r + 1)]
    for i in regular:
        classes[els[i].rank].add(i)
    lcounts, rcounts = [], []
    for cls in classes:
        hs = [halves(els[i]) for i in cls]
        rcounts.append(len({h[0] for h in hs}))
        lcounts.append(len({h[1] for h in hs}))
    return RegularDChain(tuple(frozenset(c) for c in classes), tuple(lcounts), tuple(rcounts))


def class_counts(v: Variant, q: int, bounds: EnumerationBounds = DEFAULT_BOUNDS) -> tuple:
    """``(#L-classes, #R-classes)`` in ``D_q``: distinct lower (resp. upper) halves."""
    if not 0 <= q <= v.r:
        raise PreconditionError(f"q={q} outside 0..{v.r}")
    chain = regular_d_chain(v, bounds)
    return chain.l_class_count[q], chain.r_class_count[q]


# -- Green's classes of the variant, via the P-sets ----------------------------

def _natural_key(x: Partition, kind: str):
    up, low = halves(x)
    if kind == "R":
        return up
    if kind == "L":
        return low
    if kind == "H":
        return up, low
    return x.rank          # D = J in PB_n


@lru_cache(maxsize=None)
def _class_labels(v: Variant, kind: str, bounds: EnumerationBounds) -> tuple:
    els = _elements(v.n, bounds)
    ps = p_sets(v, bounds)
    p1, p2, p3, p = ps.p1, ps.p2, ps.p3, ps.p

    def key(i, kind):
        x = els[i]
        if kind == "R":
            return ("R", _natural_key(x, "R")) if i in p1 else ("single", i)
        if kind == "L":
            return ("L", _natural_key(x, "L")) if i in p2 else ("single", i)
        if kind == "H":
            return ("H", _natural_key(x, "H")) if i in p else ("single", i)
        if kind == "D":
            if i in p:
                return ("D", x.rank)
            if i in p2:
                return key(i, "L")
            if i in p1:
                return key(i, "R")
            return ("single", i)
        if kind == "J":
            if i in p3:
                return ("J", x.rank)
            return key(i, "D")
        raise ValueError(f"unknown relation {kind!r}; expected one of {KINDS}")

    return tuple(key(i, kind) for i in range(len(els)))


def variant_green_partition(v: Variant, kind: str,
                            bounds: EnumerationBounds = DEFAULT_BOUNDS) -> list:
    """All K^alpha-classes of the variant as frozensets of element indices."""
    groups = {}
    for i, lab in enumerate(_class_labels(v, kind, bounds)):
        groups.setdefault(lab, []).append(i)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def variant_green_class(v: Variant, x: Partition, kind: str,
                        bounds: EnumerationBounds = DEFAULT_BOUNDS) -> frozenset:
    """Indices of the K^alpha-class containing ``x`` for K in R, L, H, D, J."""
    if kind not in KINDS:
        raise ValueError(f"unknown relation {kind!r}; expected one of {KINDS}")
    if x.n != v.n:
        raise DimensionError(f"element of PB_{x.n} in a variant of PB_{v.n}")
    labels = _class_labels(v, kind, bounds)
    lab = labels[index_of(v.n)[x]]
    return frozenset(i for i, l in enumerate(labels) if l == lab)


def leq_variant_R(v: Variant, s: Partition, t: Partition,
                  bounds: EnumerationBounds = DEFAULT_BOUNDS) -> bool:
    """``s <=_{R^alpha} t`` via ``s <=_R t alpha``; valid only for s in P_1."""
    if index_of(v.n)[s] not in p_sets(v, bounds).p1:
        raise PreconditionError("s is outside P_1; use the Cayley-table preorder instead")
    return leq_R_natural(s, product(t, v.alpha))


def leq_variant_L(v: Variant, s: Partition, t: Partition,
                  bounds: EnumerationBounds = DEFAULT_BOUNDS) -> bool:
    """Dual of :func:`leq_variant_R`: ``s <=_L alpha t`` for s in P_2."""
    if index_of(v.n)[s] not in p_sets(v, bounds).p2:
        raise PreconditionError("s is outside P_2; use the Cayley-table preorder instead")
    return leq_L_natural(s, product(v.alpha, t))
