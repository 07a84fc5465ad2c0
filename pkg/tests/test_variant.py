import itertools

import pytest

from partial_brauer import (PreconditionError, Variant, build_table, class_counts, from_blocks,
                            identity, leq_variant_L, leq_variant_R, p_sets, product,
                            regular_d_chain, sandwich_product, variant_green_class,
                            variant_green_partition)
from partial_brauer.enumeration import elements, index_of
from partial_brauer.pb_core import DimensionError
from partial_brauer.variant import KINDS

HOOK_LOW = from_blocks(2, [[1], [2], [-1, -2]])
ONE_THROUGH = from_blocks(2, [[1], [2, -2], [-1]])


def test_identity_sandwich_is_plain_product():
    v = Variant(identity(2))
    for x, y in itertools.product(elements(2), repeat=2):
        assert v(x, y) == product(x, y)


def test_square_of_identity():
    v = Variant(HOOK_LOW)
    assert sandwich_product(v, identity(2), identity(2)) == HOOK_LOW


@pytest.mark.parametrize("alpha", [identity(2), HOOK_LOW, ONE_THROUGH])
def test_associative(alpha):
    v = Variant(alpha)
    els = elements(2)
    for x, y, z in itertools.product(els, repeat=3):
        assert v(v(x, y), z) == v(x, v(y, z))


def test_dimension_checks():
    with pytest.raises(DimensionError):
        Variant(identity(2), n=3)
    with pytest.raises(DimensionError):
        sandwich_product(Variant(identity(2)), identity(2), identity(3))


def test_p_sets_identity_and_rank_zero():
    ps = p_sets(Variant(identity(2)))
    assert ps.p1 == ps.p2 == ps.p3 == ps.p == frozenset(range(10))
    ps = p_sets(Variant(HOOK_LOW))
    rank0 = frozenset(i for i, x in enumerate(elements(2)) if x.rank == 0)
    assert ps.p1 == ps.p2 == ps.p == rank0 and len(rank0) == 4


def test_regular_chain_examples():
    assert len(regular_d_chain(Variant(identity(2))).classes) == 3
    chain = regular_d_chain(Variant(ONE_THROUGH))
    top = chain.classes[1]
    assert [elements(2)[i] for i in top] == [from_blocks(2, [[1], [2, -2], [-1]])]
    assert len(regular_d_chain(Variant(HOOK_LOW)).classes) == 1


def test_class_counts_examples():
    v = Variant(ONE_THROUGH)
    assert class_counts(v, 1) == (1, 1)
    assert class_counts(v, 0) == (2, 2)
    assert class_counts(Variant(identity(2)), 1) == (2, 2)
    with pytest.raises(PreconditionError):
        class_counts(v, 2)


@pytest.mark.parametrize("alpha", elements(2))
def test_green_matches_table(alpha):
    v = Variant(alpha)
    g = build_table(v).green
    for kind in KINDS:
        assert variant_green_partition(v, kind) == sorted(g.classes(kind), key=min)


def test_non_regular_h_classes_are_trivial():
    v = Variant(HOOK_LOW)
    ps = p_sets(v)
    for i, x in enumerate(elements(2)):
        if i not in ps.p:
            assert variant_green_class(v, x, "H") == {i}


def test_green_class_rejects_unknown_kind():
    with pytest.raises(ValueError):
        variant_green_class(Variant(HOOK_LOW), identity(2), "X")


def test_variant_preorders_match_table():
    for alpha in (ONE_THROUGH, HOOK_LOW):
        v = Variant(alpha)
        g = build_table(v).green
        ps = p_sets(v)
        els = elements(2)
        for i, j in itertools.product(range(10), repeat=2):
            if i in ps.p1:
                assert leq_variant_R(v, els[i], els[j]) == bool(g.leq_R[i, j])
            if i in ps.p2:
                assert leq_variant_L(v, els[i], els[j]) == bool(g.leq_L[i, j])


def test_preorder_scope():
    v = Variant(HOOK_LOW)
    outside = next(x for i, x in enumerate(elements(2)) if i not in p_sets(v).p1)
    with pytest.raises(PreconditionError):
        leq_variant_R(v, outside, outside)
    assert leq_variant_R(v, HOOK_LOW, HOOK_LOW)
