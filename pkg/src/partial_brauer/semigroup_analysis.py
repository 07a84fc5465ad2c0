"""Finite semigroups given by Cayley tables.

This module knows nothing about diagrams beyond :func:`build_table`; every
other routine works on an integer table and serves as a brute-force oracle
for the formula-based code in :mod:`partial_brauer.variant`.
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Optional, Sequence

import numpy as np

from .enumeration import DEFAULT_BOUNDS, BoundError, EnumerationBounds, check_bound, elements, index_of
from .mu_numbers import PreconditionError, pb_count
from .pb_core import format_partition, product
from .variant import Variant, p_sets

MAX_TABLE_SIZE = 10_000
FULL_ASSOCIATIVITY_LIMIT = 100


class NotAssociativeError(ValueError):
    pass


@dataclass(eq=False)
class FiniteSemigroup:
    table: np.ndarray
    labels: Optional[Sequence[str]] = None
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise ValueError(f"Cayley table must be square, got shape {t.shape}")
        if t.size and (t.min() < 0 or t.max() >= t.shape[0]):
            raise ValueError("Cayley table entries out of range")
        t.setflags(write=False)
        self.table = t
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError("one label per element required")
        if self.check:
            bad = associativity_failure(t)
            if bad is not None:
                raise NotAssociativeError(f"(x y) z != x (y z) at {bad}")

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.size

    @cached_property
    def green(self) -> "GreenStructure":
        return green_structure(self)

    @cached_property
    def invariant_colors(self) -> list:
        """Per-element isomorphism invariants used to seed the search."""
        g = self.green
        sizes = {kind: Counter(g.labels[kind]) for kind in "RLHDJ"}
        height = g.j_height
        out = []
        for x in range(self.size):
            out.append((
                int(self.table[x, x] == x),
                int(x in g.regular),
                *(sizes[kind][g.labels[kind][x]] for kind in "RLHDJ"),
                height[x],
            ))
        return out


def associativity_failure(t: np.ndarray, samples: int = 10_000, seed: int = 0):
    """First failing triple, or None; exhaustive up to 100 elements, sampled above."""
    n = t.shape[0]
    if n == 0:
        return None
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        left = t[t, :]          # left[i, j, k] = (ij)k
        right = t[:, t]         # right[i, j, k] = i(jk)
        bad = np.argwhere(left != right)
        return tuple(int(v) for v in bad[0]) if len(bad) else None
    rng = np.random.default_rng(seed)
    i, j, k = rng.integers(0, n, size=(3, samples))
    bad = np.nonzero(t[t[i, j], k] != t[i, t[j, k]])[0]
    return (int(i[bad[0]]), int(j[bad[0]]), int(k[bad[0]])) if len(bad) else None


@lru_cache(maxsize=None)
def natural_table(n: int) -> np.ndarray:
    els = elements(n)
    idx = index_of(n)
    t = np.array([[idx[product(x, y)] for y in els] for x in els], dtype=np.int64).reshape(len(els), len(els))
    t.setflags(write=False)
    return t


def build_table(v: Variant, bounds: EnumerationBounds = DEFAULT_BOUNDS,
                max_size: int = MAX_TABLE_SIZE) -> FiniteSemigroup:
    """Cayley table of ``PB_n^alpha`` indexed by the enumeration order of PB_n."""
    check_bound(v.n, bounds.max_n_cayley, "Cayley table")
    if pb_count(v.n) > max_size:
        raise BoundError(f"|PB_{v.n}| = {pb_count(v.n)} exceeds the table limit {max_size}")
    m = natural_table(v.n)
    a = index_of(v.n)[v.alpha]
    t = m[m[:, a], :]
    labels = [format_partition(x).split(";", 1)[1] for x in elements(v.n)]
    return FiniteSemigroup(t, labels, check=True)


def table_csv(s: FiniteSemigroup) -> str:
    """Cayley table as CSV; first row and column carry the element labels."""
    labels = list(s.labels) if s.labels is not None else [str(i) for i in range(s.size)]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + labels)
    for i in range(s.size):
        w.writerow([labels[i]] + [labels[j] for j in s.table[i]])
    return buf.getvalue()


# -- Green's structure -----------------------------------------------------------

def _classes_from_equivalence(eq: np.ndarray):
    n = eq.shape[0]
    labels = [-1] * n
    classes = []
    for x in range(n):
        if labels[x] != -1:
            continue
        members = np.nonzero(eq[x])[0]
        for y in members:
            labels[y] = len(classes)
        classes.append(frozenset(int(y) for y in members))
    return tuple(classes), tuple(labels)


@dataclass(frozen=True, eq=False)
class GreenStructure:
    R: tuple
    L: tuple
    H: tuple
    D: tuple
    J: tuple
    labels: dict            # kind -> per-element class number
    leq_R: np.ndarray       # leq_R[x, y]  <=>  x <=_R y
    leq_L: np.ndarray
    leq_J: np.ndarray
    idempotents: frozenset
    regular: frozenset

    def classes(self, kind: str) -> tuple:
        return getattr(self, kind)

    def class_of(self, kind: str, x: int) -> frozenset:
        return getattr(self, kind)[self.labels[kind][x]]

    @cached_property
    def j_height(self) -> list:
        """Length of the longest strict <=_J chain of J-classes below each element."""
        classes = self.J
        reps = [min(c) for c in classes]
        order = sorted(range(len(classes)), key=lambda c: len(classes[c]))
        below = {c: [d for d in range(len(classes)) if d != c and self.leq_J[reps[d], reps[c]]]
                 for c in range(len(classes))}
        memo = {}

        def h(c):
            if c not in memo:
                memo[c] = 1 + max((h(d) for d in below[c]), default=-1)
            return memo[c]

        for c in order:
            h(c)
        return [memo[self.labels["J"][x]] for x in range(len(self.labels["J"]))]


def green_structure(s: FiniteSemigroup) -> GreenStructure:
    """Green's preorders from principal one-sided ideals (with an identity adjoined)."""
    t = s.table
    n = s.size
    ar = np.arange(n)
    eye = np.eye(n, dtype=bool)
    leq_r = eye.copy()
    leq_r[t, ar[:, None]] = True        # t[y, z] in y S
    leq_l = eye.copy()
    leq_l[t, ar[None, :]] = True        # t[z, y] in S y
    # S^1 y S^1 is the union of the right ideals z S^1 over z in S^1 y
    leq_j = (leq_r.astype(np.int64) @ leq_l.astype(np.int64)) > 0
    r = leq_r & leq_r.T
    l = leq_l & leq_l.T
    j = leq_j & leq_j.T
    h = r & l
    d = (r.astype(np.int64) @ l.astype(np.int64)) > 0
    parts = {}
    labels = {}
    for kind, rel in (("R", r), ("L", l), ("H", h), ("D", d), ("J", j)):
        parts[kind], labels[kind] = _classes_from_equivalence(rel)
    idem = frozenset(int(x) for x in np.nonzero(t[ar, ar] == ar)[0])
    # x regular iff x = x y x and y = y x y for some y
    xyx = t[t, ar[:, None]]               # xyx[x, y] = (x y) x
    yxy = t[t.T, ar[None, :]]             # yxy[x, y] = (y x) y
    reg = (xyx == ar[:, None]) & (yxy == ar[None, :])
    regular = frozenset(int(x) for x in np.nonzero(reg.any(axis=1))[0])
    for m in (leq_r, leq_l, leq_j):
        m.setflags(write=False)
    return GreenStructure(parts["R"], parts["L"], parts["H"], parts["D"], parts["J"], labels,
                          leq_r, leq_l, leq_j, idem, regular)


# -- isomorphism search ------------------------------------------------------------

MAX_ISO_SIZE = 200


def is_homomorphism(s: FiniteSemigroup, t: FiniteSemigroup, phi) -> bool:
    phi = np.asarray(phi)
    return bool(np.array_equal(t.table[phi[:, None], phi[None, :]], phi[s.table]))


class _Quotient:
    """A table seen through its distinct rows and columns.

    ``x y = f(row(x), col(y))``, so an isomorphism is pinned down on ``S S``
    by the bijections it induces on row classes and column classes; elements
    outside ``S S`` sharing both classes are interchangeable.
    """

    def __init__(self, s: FiniteSemigroup):
        t = s.table
        _, self.row = np.unique(t, axis=0, return_inverse=True)
        _, self.col = np.unique(t.T, axis=0, return_inverse=True)
        self.row, self.col = self.row.reshape(-1), self.col.reshape(-1)
        na, nb = int(self.row.max()) + 1, int(self.col.max()) + 1
        rep_a = [int(np.nonzero(self.row == a)[0][0]) for a in range(na)]
        rep_b = [int(np.nonzero(self.col == b)[0][0]) for b in range(nb)]
        self.f = t[np.ix_(rep_a, rep_b)]
        self.pre = [[] for _ in range(s.size)]
        for a in range(na):
            for b in range(nb):
                self.pre[int(self.f[a, b])].append((a, b))
        self.in_a = [np.nonzero(self.row == a)[0].tolist() for a in range(na)]
        self.in_b = [np.nonzero(self.col == b)[0].tolist() for b in range(nb)]
        self.image = np.array([bool(p) for p in self.pre])
        self.size, self.na, self.nb = s.size, na, nb


def _signatures(q: _Quotient, cs, ca, cb):
    f = q.f
    sig_s = [("S", cs[x], ca[q.row[x]], cb[q.col[x]],
              tuple(sorted((ca[a], cb[b]) for a, b in q.pre[x]))) for x in range(q.size)]
    sig_a = [("A", ca[a], tuple(sorted((cb[b], cs[f[a, b]]) for b in range(q.nb))),
              tuple(sorted(cs[x] for x in q.in_a[a]))) for a in range(q.na)]
    sig_b = [("B", cb[b], tuple(sorted((ca[a], cs[f[a, b]]) for a in range(q.na))),
              tuple(sorted(cs[x] for x in q.in_b[b]))) for b in range(q.nb)]
    return sig_s, sig_a, sig_b


def _ncolors(state):
    return len({(i, c) for side in state for i, cols in enumerate(side) for c in cols})


def _refine_pair(qs, qt, state):
    """Joint colour refinement of elements, row classes and column classes."""
    count = _ncolors(state)
    while True:
        palette = {}
        new = []
        for q, cols in ((qs, state[0]), (qt, state[1])):
            sigs = _signatures(q, *cols)
            new.append(tuple([palette.setdefault(sg, len(palette)) for sg in part] for part in sigs))
        state = tuple(new)
        c = _ncolors(state)
        if c == count:
            return state
        count = c


def _histograms_match(state) -> bool:
    return all(sorted(x) == sorted(y) for x, y in zip(state[0], state[1]))


def _derive(qs, qt, ca_s, ca_t, cb_s, cb_t):
    """The element map forced by discrete row/column colourings, or None."""
    pos_a = {c: a for a, c in enumerate(ca_t)}
    pos_b = {c: b for b, c in enumerate(cb_t)}
    phi_a = [pos_a[c] for c in ca_s]
    phi_b = [pos_b[c] for c in cb_s]
    phi = [-1] * qs.size
    for a in range(qs.na):
        for b in range(qs.nb):
            x, y = int(qs.f[a, b]), int(qt.f[phi_a[a], phi_b[b]])
            if phi[x] == -1:
                phi[x] = y
            elif phi[x] != y:
                return None
    for x in range(qs.size):
        if qs.image[x] and (qt.row[phi[x]] != phi_a[qs.row[x]] or qt.col[phi[x]] != phi_b[qs.col[x]]):
            return None
    groups_t = {}
    for y in range(qt.size):
        if not qt.image[y]:
            groups_t.setdefault((qt.row[y], qt.col[y]), []).append(y)
    for x in range(qs.size):
        if not qs.image[x]:
            bucket = groups_t.get((phi_a[qs.row[x]], phi_b[qs.col[x]]))
            if not bucket:
                return None
            phi[x] = bucket.pop(0)
    if sorted(phi) != list(range(qs.size)):
        return None
    return phi


def find_isomorphism(s: FiniteSemigroup, t: FiniteSemigroup,
                     max_size: int = MAX_ISO_SIZE) -> Optional[list]:
    """An isomorphism ``s -> t`` as a list ``phi[x]``, or ``None`` if none exists.

    Individualisation-refinement over row and column classes: elements are
    seeded with Green's-class invariants, colours of elements, row classes
    and column classes are refined against each other through the product,
    and the search branches on the smallest ambiguous row or column cell.
    Once those are discrete the element map is forced (up to twins).
    """
    if s.size > max_size or t.size > max_size:
        raise BoundError(f"isomorphism search limited to {max_size} elements")
    if s.size != t.size:
        return None
    if s.size == 0:
        return []
    qs, qt = _Quotient(s), _Quotient(t)
    if (qs.na, qs.nb, int(qs.image.sum())) != (qt.na, qt.nb, int(qt.image.sum())):
        return None
    palette = {}
    seed_s = [palette.setdefault(c, len(palette)) for c in s.invariant_colors]
    seed_t = [palette.setdefault(c, len(palette)) for c in t.invariant_colors]
    state = ((seed_s, [0] * qs.na, [0] * qs.nb), (seed_t, [0] * qt.na, [0] * qt.nb))

    def search(state):
        state = _refine_pair(qs, qt, state)
        if not _histograms_match(state):
            return None
        (cs_s, ca_s, cb_s), (cs_t, ca_t, cb_t) = state
        cells = []
        for part, (cols_s, cols_t) in enumerate(((ca_s, ca_t), (cb_s, cb_t))):
            for c, m in Counter(cols_s).items():
                if m > 1:
                    cells.append((m, part, c))
        if not cells:
            phi = _derive(qs, qt, ca_s, ca_t, cb_s, cb_t)
            if phi is None or not is_homomorphism(s, t, phi):
                return None
            return phi
        _, part, c = min(cells)
        cols_s, cols_t = state[0][part + 1], state[1][part + 1]
        i = cols_s.index(c)
        fresh = 1 + max(max(v) for side in state for v in side)
        for j in [j for j, cj in enumerate(cols_t) if cj == c]:
            ns = [list(v) for v in state[0]]
            nt = [list(v) for v in state[1]]
            ns[part + 1][i] = fresh
            nt[part + 1][j] = fresh
            found = search((tuple(ns), tuple(nt)))
            if found is not None:
                return found
        return None

    return search(state)


# -- definition-based P-sets and rank-zero structure ---------------------------------

def p_sets_from_table(v: Variant, bounds: EnumerationBounds = DEFAULT_BOUNDS) -> dict:
    """P-sets straight from their definitions in PB_n (x a R x, a x L x, a x a J x)."""
    nat = FiniteSemigroup(natural_table(v.n), check=False)
    check_bound(v.n, bounds.max_n_cayley, "Cayley table")
    g = nat.green
    m = nat.table
    a = index_of(v.n)[v.alpha]
    lab = g.labels
    size = nat.size
    p1 = frozenset(x for x in range(size) if lab["R"][m[x, a]] == lab["R"][x])
    p2 = frozenset(x for x in range(size) if lab["L"][m[a, x]] == lab["L"][x])
    p3 = frozenset(x for x in range(size) if lab["J"][m[m[a, x], a]] == lab["J"][x])
    return {"p1": p1, "p2": p2, "p3": p3, "p": p1 & p2}


def _rank_zero_check(v: Variant):
    if v.r != 0:
        raise PreconditionError(f"sandwich element has rank {v.r}; rank 0 required")


def retraction(v: Variant, bounds: EnumerationBounds = DEFAULT_BOUNDS) -> np.ndarray:
    """``phi(x) = x * x`` in the variant, as an index array."""
    t = build_table(v, bounds).table
    return t[np.arange(t.shape[0]), np.arange(t.shape[0])]


def verify_inflation(v: Variant, bounds: EnumerationBounds = DEFAULT_BOUNDS) -> bool:
    """Check that a rank-0 variant is an inflation of its regular part along ``x -> x alpha x``."""
    _rank_zero_check(v)
    t = build_table(v, bounds).table
    phi = t[np.arange(t.shape[0]), np.arange(t.shape[0])]
    reg = sorted(p_sets(v, bounds).p)
    if not set(phi.tolist()) <= set(reg):
        return False
    if not np.array_equal(phi[reg], reg):
        return False
    return bool(np.array_equal(t, t[phi[:, None], phi[None, :]]))


def preimage_multiset(v: Variant, bounds: EnumerationBounds = DEFAULT_BOUNDS) -> list:
    """Sorted sizes of the fibres of ``x -> x * x`` over the regular elements."""
    _rank_zero_check(v)
    phi = retraction(v, bounds)
    counts = Counter(phi.tolist())
    return sorted(counts.get(x, 0) for x in p_sets(v, bounds).p)
