import pytest

from partial_brauer import (UndefinedPairError, domain_paths, epsilon_pair, halves, identity,
                            join, join_rank, parse_pb_pair, partition_from_halves, pb_pair)
from partial_brauer.enumeration import elements
from partial_brauer.pb_core import PartitionError, from_blocks
from partial_brauer.pb_pairs import format_pb_pair

HOOKED = pb_pair(13, [[3, 8]], [1, 2, 9])


def test_epsilon_pair_shape():
    e = epsilon_pair(13, 7, 4)
    assert e.singletons() == list(range(1, 8))
    assert e.doubles() == [[8, 9], [10, 11], [12, 13]]
    assert sorted(x + 1 for x in e.domain) == [1, 2, 3, 4]
    full = epsilon_pair(5, 5, 5)
    assert full.doubles() == [] and full.rank == 5


@pytest.mark.parametrize("args", [(4, 1, 1), (3, 5, 1), (4, 2, 3), (-1, 0, 0)])
def test_epsilon_pair_undefined(args):
    with pytest.raises(UndefinedPairError):
        epsilon_pair(*args)


def test_join_ranks_differ_by_hook():
    assert join_rank(epsilon_pair(13, 7, 4), HOOKED) == 3
    assert join_rank(epsilon_pair(13, 9, 4), HOOKED) == 2
    assert join(epsilon_pair(13, 7, 4), HOOKED).rank == 3


def test_hooked_path():
    paths = domain_paths(epsilon_pair(13, 7, 4), HOOKED)
    assert [3, 8, 9] in [list(p) for p in paths]


def test_trivial_join():
    e = epsilon_pair(4, 4, 4)
    res = join(e, e)
    assert res.rank == 4
    assert [list(z) for z in res.domain_pairs] == [[i, i] for i in range(1, 5)]


def test_halves_of_worked_example():
    alpha = from_blocks(7, [[1, 5], [2], [3, -2], [4], [6, -5], [7, -7], [-1, -6], [-3, -4]])
    up, low = halves(alpha)
    assert up.doubles() == [[1, 5]]
    assert sorted(x + 1 for x in up.domain) == [3, 6, 7]
    assert low.doubles() == [[1, 6], [3, 4]]
    assert halves(identity(3)) == (epsilon_pair(3, 3, 3), epsilon_pair(3, 3, 3))


def test_halves_round_trip():
    for x in elements(3):
        up, low = halves(x)
        pairing = {i: x.partner[i] - 3 for i in up.domain}
        assert partition_from_halves(up, low, pairing) == x


def test_text_format():
    p = parse_pb_pair("13; eq=[[3,8]]; X=[1,2,9]")
    assert p == HOOKED
    assert parse_pb_pair(format_pb_pair(p)) == p
    with pytest.raises(PartitionError):
        pb_pair(3, [[1, 2]], [1])
