"""Deciding when two variants of PB_n are isomorphic.

For sandwich elements of positive rank the invariants (n, r, k, p) decide the
question outright.  At rank zero only the "equal invariants => isomorphic"
direction is proved; the converse is an open hypothesis, so distinct
invariants produce a conjectural verdict unless a table search settles it.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .enumeration import DEFAULT_BOUNDS, EnumerationBounds, elements, index_of
from .mu_numbers import PreconditionError
from .pb_core import Partition, from_permutation, product, product_many, stats
from .semigroup_analysis import build_table, find_isomorphism, is_homomorphism, preimage_multiset
from .variant import Variant, leq_variant_L, leq_variant_R, p_sets

ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not_isomorphic"
CONJECTURAL = "conjectural"


class NoConjugatorError(ValueError):
    pass


@dataclass(frozen=True)
class InvariantTuple:
    n: int
    r: int
    k: int
    p: int

    def __post_init__(self):
        n, r, k, p = self.n, self.r, self.k, self.p
        if not (n >= k >= r >= 0 and n >= p >= r and (n - k) % 2 == 0 and (n - p) % 2 == 0):
            raise ValueError(f"inconsistent invariants {self}")


def invariants(alpha: Partition) -> InvariantTuple:
    st = stats(alpha)
    return InvariantTuple(alpha.n, st.rank, st.ker_singletons, st.coker_singletons)


@dataclass
class Verdict:
    verdict: str                     # isomorphic | not_isomorphic | conjectural
    detail: Optional[str] = None     # for conjectural: equal_invariants | distinct_invariants
    reason: str = ""
    invariants: tuple = ()
    conjugators: Optional[tuple] = None
    witness: Optional[list] = None   # element-index bijection PB^alpha -> PB^beta, when checked
    oracle: Optional[str] = None     # table-search verdict, when requested

    @property
    def definitive(self) -> Optional[str]:
        """A proved answer if there is one, else one backed by the Cayley tables.

        A rank-0 pair with equal invariants counts as isomorphic once its
        conjugation witness has been checked on both tables.
        """
        if self.verdict != CONJECTURAL:
            return self.verdict
        if self.oracle is not None:
            return self.oracle
        if self.witness is not None:
            return ISOMORPHIC
        return None

    def as_record(self) -> dict:
        rec = {"verdict": self.verdict, "reason": self.reason,
               "invariants": [vars(t) for t in self.invariants]}
        if self.detail:
            rec["detail"] = self.detail
        if self.conjugators is not None:
            rec["conjugators"] = [list(self.conjugators[0]), list(self.conjugators[1])]
        if self.witness is not None:
            rec["witness"] = self.witness
        if self.oracle is not None:
            rec["oracle"] = self.oracle
        return rec


def _match(src, dst, mapping):
    for a, b in zip(sorted(src), sorted(dst)):
        for x, y in zip(a, b):
            mapping[x] = y


def construct_conjugators(alpha: Partition, beta: Partition) -> tuple:
    """Permutations ``(pi1, pi2)`` (1-based image lists) with ``pi1 alpha pi2 = beta``.

    Upper blocks of alpha are sent to upper blocks of beta type by type
    (transversal ends, then doubles, then non-domain singletons), each list
    matched in increasing order; the lower row follows the transversals.
    """
    ia, ib = invariants(alpha), invariants(beta)
    if ia != ib:
        raise NoConjugatorError(f"invariants differ: {ia} vs {ib}")
    n = alpha.n
    sa, sb = stats(alpha), stats(beta)

    def transversals(x, st):
        return sorted((i, x.partner[i - 1] - n + 1) for i in st.dom)

    ta, tb = transversals(alpha, sa), transversals(beta, sb)
    up, low = {}, {}
    for (xa, ya), (xb, yb) in zip(ta, tb):
        up[xa] = xb
        low[ya] = yb
    _match([c for c in sa.ker_classes if len(c) == 2], [c for c in sb.ker_classes if len(c) == 2], up)
    _match([c for c in sa.ker_classes if len(c) == 1 and c[0] not in sa.dom],
           [c for c in sb.ker_classes if len(c) == 1 and c[0] not in sb.dom], up)
    _match([c for c in sa.coker_classes if len(c) == 2], [c for c in sb.coker_classes if len(c) == 2], low)
    _match([c for c in sa.coker_classes if len(c) == 1 and c[0] not in sa.codom],
           [c for c in sb.coker_classes if len(c) == 1 and c[0] not in sb.codom], low)
    # pi1 alpha pulls alpha's upper row back along pi1, so pi1 is the inverse of `up`
    pi1 = [0] * n
    for x, y in up.items():
        pi1[y - 1] = x
    pi2 = [low[i] for i in range(1, n + 1)]
    got = product_many(from_permutation(pi1), alpha, from_permutation(pi2))
    if got != beta:
        raise RuntimeError(f"conjugator construction failed: {got} != {beta}")
    return tuple(pi1), tuple(pi2)


def _inverse(perm):
    inv = [0] * len(perm)
    for i, j in enumerate(perm, start=1):
        inv[j - 1] = i
    return inv


def conjugation_map(alpha: Partition, beta: Partition, conjugators=None) -> list:
    """Index bijection ``xi -> pi2^-1 xi pi1^-1`` from PB^alpha onto PB^beta."""
    pi1, pi2 = conjugators or construct_conjugators(alpha, beta)
    n = alpha.n
    left = from_permutation(_inverse(pi2))
    right = from_permutation(_inverse(pi1))
    idx = index_of(n)
    return [idx[product_many(left, x, right)] for x in elements(n)]


def _table_verdict(alpha, beta, bounds):
    s = build_table(Variant(alpha), bounds)
    t = build_table(Variant(beta), bounds)
    phi = find_isomorphism(s, t)
    return (ISOMORPHIC if phi is not None else NOT_ISOMORPHIC), phi


def decide_isomorphism(alpha: Partition, beta: Partition, oracle: bool = False,
                       verify_witness: bool = True,
                       bounds: EnumerationBounds = DEFAULT_BOUNDS) -> Verdict:
    """Classify ``PB_m^alpha`` against ``PB_n^beta`` from their invariants.

    ``oracle=True`` additionally runs the Cayley-table isomorphism search.
    With ``verify_witness`` an isomorphic verdict carries the conjugation
    bijection, checked against both Cayley tables (small n only).
    """
    ia, ib = invariants(alpha), invariants(beta)
    v = Verdict(NOT_ISOMORPHIC, invariants=(ia, ib))
    if ia.n != ib.n:
        v.reason = "different ground sets, so different orders"
    elif ia.r != ib.r:
        v.reason = "different numbers of regular D-classes"
    elif ia.k == ib.k and ia.p == ib.p:
        if ia.r >= 1:
            v.verdict = ISOMORPHIC
            v.reason = "equal invariants: conjugate by units"
        else:
            v.verdict = CONJECTURAL
            v.detail = "equal_invariants"
            v.reason = "rank 0 with equal invariants; settled only by a checked witness"
        v.conjugators = construct_conjugators(alpha, beta)
        if verify_witness and ia.n <= bounds.max_n_cayley:
            phi = conjugation_map(alpha, beta, v.conjugators)
            s, t = build_table(Variant(alpha), bounds), build_table(Variant(beta), bounds)
            if not is_homomorphism(s, t, phi) or sorted(phi) != list(range(len(phi))):
                raise RuntimeError("conjugation map failed the homomorphism check")
            v.witness = phi
    elif ia.r >= 1:
        v.reason = ("L-class counts differ in the top regular D-class" if ia.k != ib.k
                    else "R-class counts differ in the top regular D-class")
    else:
        v.verdict = CONJECTURAL
        v.detail = "distinct_invariants"
        v.reason = "rank 0 with (k, p) != (l, w): conjectured non-isomorphic, not proved"
    if oracle:
        verdict, phi = _table_verdict(alpha, beta, bounds)
        v.oracle = verdict
        if phi is not None and v.witness is None:
            v.witness = phi
    return v


# -- rank-zero diagnostics ---------------------------------------------------------

def _preorder_fingerprint(leq: np.ndarray) -> list:
    """Sorted (height, size, #strictly below, #strictly above) over the classes of a preorder."""
    n = leq.shape[0]
    eq = leq & leq.T
    labels = [-1] * n
    reps = []
    for x in range(n):
        if labels[x] == -1:
            for y in np.nonzero(eq[x])[0]:
                labels[y] = len(reps)
            reps.append(x)
    sizes = Counter(labels)
    below = {c: [d for d in range(len(reps)) if d != c and leq[reps[d], reps[c]]] for c in range(len(reps))}
    memo = {}

    def height(c):
        if c not in memo:
            memo[c] = 1 + max((height(d) for d in below[c]), default=-1)
        return memo[c]

    above = Counter()
    for c in range(len(reps)):
        for d in below[c]:
            above[d] += sizes[c]
    return sorted((height(c), sizes[c], sum(sizes[d] for d in below[c]), above[c])
                  for c in range(len(reps)))


def variant_preorders(v: Variant, bounds: EnumerationBounds = DEFAULT_BOUNDS) -> tuple:
    """``<=_{R^alpha}`` and ``<=_{L^alpha}`` as boolean matrices.

    Rows in P_1 (resp. P_2) use the diagram criterion; other rows fall back to
    principal ideals read off the Cayley table.
    """
    els = elements(v.n)
    ps = p_sets(v, bounds)
    tab = build_table(v, bounds).green
    n = len(els)
    leq_r = np.zeros((n, n), dtype=bool)
    leq_l = np.zeros((n, n), dtype=bool)
    for i, s in enumerate(els):
        for j, t in enumerate(els):
            leq_r[i, j] = leq_variant_R(v, s, t, bounds) if i in ps.p1 else tab.leq_R[i, j]
            leq_l[i, j] = leq_variant_L(v, s, t, bounds) if i in ps.p2 else tab.leq_L[i, j]
    return leq_r, leq_l


@dataclass
class RankZeroReport:
    invariants: tuple
    hypothesis_predicts: str          # what the hypothesis (read as k=l, p=w) predicts
    preimages: tuple
    r_fingerprints: tuple
    l_fingerprints: tuple
    verdict: Optional[str] = None     # table-search verdict
    notes: list = field(default_factory=list)

    def as_record(self) -> dict:
        return {
            "invariants": [vars(t) for t in self.invariants],
            "hypothesis_predicts": self.hypothesis_predicts,
            "preimages": [list(m) for m in self.preimages],
            "r_fingerprints_equal": self.r_fingerprints[0] == self.r_fingerprints[1],
            "l_fingerprints_equal": self.l_fingerprints[0] == self.l_fingerprints[1],
            "r_fingerprints": [list(map(list, f)) for f in self.r_fingerprints],
            "l_fingerprints": [list(map(list, f)) for f in self.l_fingerprints],
            "verdict": self.verdict,
            "notes": self.notes,
        }


def rank_zero_report(alpha: Partition, beta: Partition, oracle: bool = True,
                     bounds: EnumerationBounds = DEFAULT_BOUNDS) -> RankZeroReport:
    ia, ib = invariants(alpha), invariants(beta)
    if ia.r != 0 or ib.r != 0:
        raise PreconditionError(f"both sandwich elements must have rank 0, got {ia.r} and {ib.r}")
    if ia.n != ib.n:
        raise PreconditionError("sandwich elements on different ground sets")
    va, vb = Variant(alpha), Variant(beta)
    pre = (tuple(preimage_multiset(va, bounds)), tuple(preimage_multiset(vb, bounds)))
    ra, la = variant_preorders(va, bounds)
    rb, lb = variant_preorders(vb, bounds)
    predicts = ISOMORPHIC if (ia.k, ia.p) == (ib.k, ib.p) else NOT_ISOMORPHIC
    rep = RankZeroReport(
        invariants=(ia, ib),
        hypothesis_predicts=predicts,
        preimages=pre,
        r_fingerprints=(tuple(_preorder_fingerprint(ra)), tuple(_preorder_fingerprint(rb))),
        l_fingerprints=(tuple(_preorder_fingerprint(la)), tuple(_preorder_fingerprint(lb))),
        notes=[
            "criterion read as k=l and p=w; the literal 'p=q' compares p with an unbound symbol",
            "equal preimage multisets are necessary for isomorphism but not sufficient",
        ],
    )
    if oracle:
        rep.verdict, _ = _table_verdict(alpha, beta, bounds)
        if rep.verdict != predicts:
            rep.notes.append("table verdict DISAGREES with the hypothesis")
        else:
            rep.notes.append("table verdict agrees with the hypothesis (evidence, not proof)")
    return rep
