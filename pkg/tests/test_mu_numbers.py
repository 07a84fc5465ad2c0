import pytest
from hypothesis import given, strategies as st

from partial_brauer import (MuTable, PreconditionError, a_seq, check_mu_inequality, closed_form,
                            mu, mu_bruteforce, pb_count)
from partial_brauer.mu_numbers import double_factorial, mu_bruteforce_swapped
from partial_brauer.semigroup_analysis import natural_table, FiniteSemigroup
from partial_brauer.enumeration import elements


def test_a_sequence():
    assert [a_seq(k) for k in range(7)] == [1, 1, 2, 4, 10, 26, 76]
    assert [pb_count(n) for n in range(5)] == [1, 2, 10, 76, 764]


def test_double_factorial():
    assert [double_factorial(m) for m in (-1, 1, 3, 5)] == [1, 1, 3, 15]


@pytest.mark.parametrize("key, value", [
    ((2, 0, 0, 0), 2), ((1, 1, 1, 1), 1), ((3, 1, 1, 1), 4), ((3, 3, 1, 1), 2),
    ((2, 2, 1, 1), 1), ((2, 2, 2, 2), 1), ((2, 2, 2, 1), 2), ((0, 0, 0, 0), 1),
])
def test_known_values(key, value):
    assert mu(*key) == value
    assert mu_bruteforce(*key) == value


def test_out_of_range_is_zero():
    assert mu(3, 1, 0, 1) == 0
    assert mu(4, 1, 1, 1) == 0
    assert mu_bruteforce(3, 1, 0, 1) == 0


def test_large_instance():
    assert mu(13, 7, 4, 3) > mu(13, 9, 4, 3)
    assert check_mu_inequality(13, 7, 4, 3)
    assert check_mu_inequality(3, 1, 1, 1)


def test_inequality_preconditions():
    with pytest.raises(PreconditionError):
        check_mu_inequality(3, 1, 0, 0)
    with pytest.raises(PreconditionError):
        check_mu_inequality(3, 3, 1, 1)


def test_big_integers():
    assert closed_form(40) == a_seq(40) > 2 ** 64


@given(st.integers(0, 30))
def test_closed_form_is_involution_count(n):
    assert closed_form(n) == a_seq(n)


def test_swapped_roles_agree():
    for n in range(7):
        for k in range(n % 2, n + 1, 2):
            for r in range(k + 1):
                for q in range(r + 1):
                    assert mu_bruteforce_swapped(n, k, r, q) == mu_bruteforce(n, k, r, q)


def test_identity_sandwich_counts_l_classes():
    for n in range(4):
        g = FiniteSemigroup(natural_table(n), check=False).green
        els = elements(n)
        for q in range(n + 1):
            classes = {g.labels["L"][i] for i, x in enumerate(els) if x.rank == q}
            assert len(classes) == mu(n, n, n, q)


def test_mu_table_rows():
    table = MuTable()
    rows = list(table.rows(3))
    assert rows[0] == (0, 0, 0, 0, 1)
    assert all((n - k) % 2 == 0 and q <= r <= k <= n for n, k, r, q, _ in rows)
    assert table[3, 1, 1, 1] == 4 and table[3, 2, 1, 1] == 0
