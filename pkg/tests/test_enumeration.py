import pytest

from partial_brauer import BoundError, EnumerationBounds, all_partitions, all_pb_pairs, partitions_filtered
from partial_brauer.enumeration import elements, index_of
from partial_brauer.mu_numbers import a_seq


@pytest.mark.parametrize("n, count", [(0, 1), (1, 2), (2, 10), (3, 76), (4, 764)])
def test_monoid_sizes(n, count):
    assert sum(1 for _ in all_partitions(n)) == count


def test_enumeration_is_duplicate_free_and_indexed():
    els = elements(3)
    assert len(set(els)) == len(els)
    assert all(index_of(3)[x] == i for i, x in enumerate(els))


@pytest.mark.parametrize("n, count", [(0, 1), (1, 2), (2, 5)])
def test_pb_pair_counts(n, count):
    assert sum(1 for _ in all_pb_pairs(n)) == count


def test_pb_pair_equivalences():
    eqs = {p.eq for p in all_pb_pairs(4)}
    assert len(eqs) == a_seq(4) == 10


def test_filters():
    assert sum(1 for _ in partitions_filtered(2, rank=0)) == 4
    assert sum(1 for _ in partitions_filtered(2, rank=2)) == 2
    assert sum(1 for _ in partitions_filtered(2, rank=1, ker_singletons=2, coker_singletons=2)) == 4


def test_bound_message():
    with pytest.raises(BoundError, match="raise --max-n"):
        next(all_partitions(5))
    assert sum(1 for _ in all_partitions(5, EnumerationBounds(max_n_full_monoid=5))) == 9496
    with pytest.raises(ValueError):
        EnumerationBounds(max_n_cayley=0)
