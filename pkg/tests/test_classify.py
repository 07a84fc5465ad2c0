import itertools

import pytest

from partial_brauer import (NoConjugatorError, Variant, build_table, construct_conjugators,
                            conjugation_map, decide_isomorphism, find_isomorphism, from_blocks,
                            from_permutation, identity, invariants, is_homomorphism,
                            rank_zero_report)
from partial_brauer.classify import CONJECTURAL, ISOMORPHIC, NOT_ISOMORPHIC, InvariantTuple
from partial_brauer.enumeration import elements
from partial_brauer.pb_core import product_many

ALPHA = from_blocks(2, [[1], [2], [-1, -2]])
BETA = from_blocks(2, [[1, 2], [-1, -2]])
SEVEN = from_blocks(7, [[1, 5], [2], [3, -2], [4], [6, -5], [7, -7], [-1, -6], [-3, -4]])


def test_invariants():
    assert invariants(SEVEN) == InvariantTuple(7, 3, 5, 3)
    assert invariants(identity(3)) == InvariantTuple(3, 3, 3, 3)
    assert invariants(ALPHA) == InvariantTuple(2, 0, 2, 0)
    with pytest.raises(ValueError):
        InvariantTuple(2, 1, 0, 2)


def test_conjugators():
    assert construct_conjugators(identity(3), identity(3)) == ((1, 2, 3), (1, 2, 3))
    swap = from_permutation([2, 1])
    pi1, pi2 = construct_conjugators(identity(2), swap)
    assert product_many(from_permutation(pi1), identity(2), from_permutation(pi2)) == swap
    with pytest.raises(NoConjugatorError):
        construct_conjugators(ALPHA, BETA)


def test_conjugation_map_is_isomorphism():
    a = from_blocks(3, [[1, -2], [2], [3], [-1], [-3]])
    b = from_blocks(3, [[3, -1], [1], [2], [-2], [-3]])
    phi = conjugation_map(a, b)
    assert is_homomorphism(build_table(Variant(a)), build_table(Variant(b)), phi)


def test_verdicts():
    swap = from_permutation([2, 1])
    v = decide_isomorphism(identity(2), swap)
    assert v.verdict == ISOMORPHIC and v.witness is not None
    assert decide_isomorphism(identity(2), identity(3)).verdict == NOT_ISOMORPHIC
    a = from_blocks(3, [[1, -1], [2], [3], [-2], [-3]])
    b = from_blocks(3, [[1, -1], [2, 3], [-2], [-3]])
    assert decide_isomorphism(a, b).verdict == NOT_ISOMORPHIC


def test_rank_zero_example_stays_conjectural():
    v = decide_isomorphism(ALPHA, BETA)
    assert (v.verdict, v.detail) == (CONJECTURAL, "distinct_invariants")
    assert v.definitive is None
    v = decide_isomorphism(ALPHA, BETA, oracle=True)
    assert v.oracle == NOT_ISOMORPHIC and v.definitive == NOT_ISOMORPHIC


def test_rank_zero_equal_invariants_carry_witness():
    a = from_blocks(3, [[1, 2], [3], [-1], [-2, -3]])
    b = from_blocks(3, [[1, 3], [2], [-1, -2], [-3]])
    v = decide_isomorphism(a, b)
    assert (v.verdict, v.detail) == (CONJECTURAL, "equal_invariants")
    assert v.witness is not None and v.definitive == ISOMORPHIC


def test_agrees_with_table_search_on_pb2():
    els = elements(2)
    tables = {a: build_table(Variant(a)) for a in els}
    for a, b in itertools.combinations_with_replacement(els, 2):
        v = decide_isomorphism(a, b, oracle=True)
        truth = ISOMORPHIC if find_isomorphism(tables[a], tables[b]) is not None else NOT_ISOMORPHIC
        assert v.definitive == truth
        if v.verdict == ISOMORPHIC:
            assert is_homomorphism(tables[a], tables[b], v.witness)


def test_separated_invariants_have_different_counts():
    from partial_brauer import class_counts
    for n in range(1, 4):
        els = [a for a in elements(n) if a.rank >= 1]
        for a, b in itertools.combinations(els, 2):
            ia, ib = invariants(a), invariants(b)
            if ia.r == ib.r and (ia.k, ia.p) != (ib.k, ib.p):
                ca, cb = class_counts(Variant(a), ia.r), class_counts(Variant(b), ib.r)
                if ia.k != ib.k:
                    assert ca[0] != cb[0]
                else:
                    assert ca[1] != cb[1]


def test_rank_zero_report():
    rep = rank_zero_report(ALPHA, BETA)
    assert rep.preimages == ((1, 1, 3, 5), (1, 1, 3, 5))
    assert rep.r_fingerprints[0] != rep.r_fingerprints[1]
    assert rep.verdict == NOT_ISOMORPHIC
    assert any("p=w" in note for note in rep.notes)
    same = rank_zero_report(ALPHA, ALPHA)
    assert same.r_fingerprints[0] == same.r_fingerprints[1]
    assert same.verdict == ISOMORPHIC


def test_rank_zero_hypothesis_at_n2():
    zero = [a for a in elements(2) if a.rank == 0]
    for a, b in itertools.combinations_with_replacement(zero, 2):
        rep = rank_zero_report(a, b)
        assert rep.verdict == rep.hypothesis_predicts


def test_rank_zero_report_precondition():
    from partial_brauer import PreconditionError
    with pytest.raises(PreconditionError):
        rank_zero_report(identity(2), ALPHA)
