"""Named property checks run by ``pbvariant verify``.

Each check returns ``(passed, detail)``; they are pure and independent, so
the CLI may run them in a process pool.
"""
from __future__ import annotations

import itertools
import random

from .classify import NOT_ISOMORPHIC, decide_isomorphism
from .enumeration import EnumerationBounds, all_partitions, elements
from .mu_numbers import a_seq, check_mu_inequality, mu, mu_bruteforce, pb_count
from .pb_core import parse_partition
from .semigroup_analysis import (build_table, find_isomorphism, p_sets_from_table,
                                 preimage_multiset, verify_inflation)
from .variant import KINDS, Variant, class_counts, p_sets, regular_d_chain, variant_green_partition


def cardinality(card_max_n=4, **_):
    bounds = EnumerationBounds(max_n_full_monoid=max(card_max_n, 1))
    counts = [sum(1 for _ in all_partitions(n, bounds)) for n in range(card_max_n + 1)]
    want = [pb_count(n) for n in range(card_max_n + 1)]
    return counts == want, f"|PB_n| for n=0..{card_max_n}: {counts}"


def mu_oracle(mu_max_n=7, **_):
    bad = []
    count = 0
    for n in range(mu_max_n + 1):
        for k in range(n % 2, n + 1, 2):
            for r in range(k + 1):
                for q in range(r + 1):
                    count += 1
                    if mu(n, k, r, q) != mu_bruteforce(n, k, r, q):
                        bad.append((n, k, r, q))
    return not bad, f"{count} quadruples, mismatches: {bad[:5]}"


def mu_closed_form(**_):
    bad = [(n, k, r) for n in range(13) for k in range(n % 2, n + 1, 2) for r in range(k + 1)
           if mu(n, k, r, 0) != a_seq(n)]
    return not bad, f"mu(n,k,r,0) = a(n) for n<=12; failures: {bad[:5]}"


def mu_separation(mu_max_n=7, **_):
    bad = []
    for n in range(mu_max_n + 1):
        for k in range(n % 2, n - 1, 2):
            for r in range(1, k + 1):
                for q in range(1, r + 1):
                    if not check_mu_inequality(n, k, r, q):
                        bad.append((n, k, r, q))
    flat = all(len({mu(n, k, 0, 0) for k in range(n % 2, n + 1, 2)}) == 1 for n in range(mu_max_n + 1))
    return not bad and flat, f"strict failures: {bad[:5]}; rank-0 values constant in k: {flat}"


def class_counts_check(max_n=3, **_):
    bad = []
    for n in range(max_n + 1):
        for alpha in elements(n):
            v = Variant(alpha)
            g = build_table(v).green
            els = elements(n)
            for q in range(v.r + 1):
                level = [x for x in g.regular if els[x].rank == q]
                got = (len({g.labels["L"][x] for x in level}), len({g.labels["R"][x] for x in level}))
                want = (mu(n, v.k, v.r, q), mu(n, v.p, v.r, q))
                if got != want or class_counts(v, q) != want:
                    bad.append((str(alpha), q))
    return not bad, f"failures: {bad[:3]}"


def green_classes(green_max_n=2, **_):
    bad = []
    for n in range(green_max_n + 1):
        for alpha in elements(n):
            v = Variant(alpha)
            g = build_table(v).green
            for kind in KINDS:
                if sorted(g.classes(kind), key=min) != variant_green_partition(v, kind):
                    bad.append((str(alpha), kind))
    return not bad, f"failures: {bad[:3]}"


def p_set_identities(max_n=3, **_):
    bad = []
    for n in range(max_n + 1):
        for alpha in elements(n):
            v = Variant(alpha)
            ps = p_sets(v)
            ref = p_sets_from_table(v)
            reg = build_table(v).green.regular
            if (ps.p1, ps.p2, ps.p3, ps.p) != (ref["p1"], ref["p2"], ref["p3"], ref["p"]) or ps.p != reg:
                bad.append(str(alpha))
    return not bad, f"failures: {bad[:3]}"


def regular_chain(max_n=3, **_):
    bad = []
    for n in range(max_n + 1):
        for alpha in elements(n):
            v = Variant(alpha)
            g = build_table(v).green
            chain = regular_d_chain(v).classes
            regular_d = sorted((c for c in g.D if c <= g.regular), key=min)
            if sorted(chain, key=min) != regular_d:
                bad.append(str(alpha))
                continue
            reps = [min(c) for c in chain]
            for i, j in itertools.product(range(len(reps)), repeat=2):
                if bool(g.leq_J[reps[i], reps[j]]) != (i <= j):
                    bad.append(str(alpha))
                    break
    return not bad, f"failures: {bad[:3]}"


def classification(iso_max_n=2, **_):
    bad = []
    pairs = 0
    for n in range(1, iso_max_n + 1):
        els = [a for a in elements(n) if a.rank >= 1]
        tables = {a: build_table(Variant(a)) for a in els}
        for a, b in itertools.combinations_with_replacement(els, 2):
            pairs += 1
            v = decide_isomorphism(a, b)
            oracle = find_isomorphism(tables[a], tables[b]) is not None
            if (v.verdict == "isomorphic") != oracle or (oracle and v.witness is None):
                bad.append((str(a), str(b)))
    return not bad, f"{pairs} pairs, disagreements: {bad[:3]}"


def rank_zero_example(**_):
    alpha = parse_partition("2;[[1],[2],[-1,-2]]")
    beta = parse_partition("2;[[1,2],[-1,-2]]")
    v = decide_isomorphism(alpha, beta, oracle=True)
    pre = preimage_multiset(Variant(alpha)), preimage_multiset(Variant(beta))
    ok = v.oracle == NOT_ISOMORPHIC and pre == ([1, 1, 3, 5], [1, 1, 3, 5])
    return ok, f"oracle={v.oracle}, preimages={pre}"


def inflation(max_n=3, seed=0, **_):
    bad = [str(a) for n in range(max_n + 1) for a in elements(n)
           if a.rank == 0 and not verify_inflation(Variant(a))]
    return not bad, f"failures: {bad[:3]}"


def associativity_sample(seed=0, samples=2000, **_):
    from .pb_core import product
    rng = random.Random(seed)
    els = elements(4)
    for _ in range(samples):
        a, b, c = (rng.choice(els) for _ in range(3))
        if product(product(a, b), c) != product(a, product(b, c)):
            return False, f"({a})({b})({c})"
    return True, f"{samples} random triples in PB_4"


CHECKS = {
    "cardinality": cardinality,
    "mu-oracle": mu_oracle,
    "mu-closed-form": mu_closed_form,
    "mu-separation": mu_separation,
    "class-counts": class_counts_check,
    "green-classes": green_classes,
    "p-sets": p_set_identities,
    "regular-chain": regular_chain,
    "classification": classification,
    "rank-zero-example": rank_zero_example,
    "inflation": inflation,
    "associativity": associativity_sample,
}


def run_check(name, **options):
    passed, detail = CHECKS[name](**options)
    return name, bool(passed), detail
