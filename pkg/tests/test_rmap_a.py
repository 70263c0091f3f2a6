import pytest
from hypothesis import given

from crystal_automata import (
    ElementA,
    apply_r_a,
    limit_x_prime,
    p_limit_values,
    p_values,
    pfun,
    pfun_limit,
)
from crystal_automata.errors import DimensionMismatchError, IndexOutOfRangeError

from oracles import p_bruteforce, p_limit_closed_form, r_a_oracle
from strategies import pair_a

A = ElementA


@pytest.mark.parametrize(
    "x, y, i, expected",
    [
        ((2, 0), (0, 1), 1, 0),
        ((2, 0), (0, 1), 2, 1),
        ((1, 0, 2), (0, 1, 0), 2, 1),
    ],
)
def test_pfun_examples(x, y, i, expected):
    assert pfun(i, A(x), A(y)) == expected


def test_pfun_frozen_values():
    # frozen from the brute-force oracle
    assert p_values(A((3, 1, 0, 2)), A((1, 2, 2, 0))) == (1, 3, 2, 0)
    assert p_values(A((0, 4, 1)), A((2, 0, 3))) == (2, 0, 4)
    assert p_values(A((1, 0, 2)), A((0, 1, 0))) == (0, 1, 0)


@pytest.mark.parametrize(
    "x, y, xp, yp",
    [
        ((2, 0), (0, 1), (1, 0), (1, 1)),
        ((1, 0, 2), (0, 1, 0), (1, 0, 0), (0, 1, 2)),
        ((0, 0, 4), (0, 0, 2), (0, 0, 2), (0, 0, 4)),
        ((3, 1, 0, 2), (1, 2, 2, 0), (3, 1, 0, 1), (1, 2, 2, 1)),
    ],
)
def test_apply_r_a_examples(x, y, xp, yp):
    rx, ry = apply_r_a(A(x), A(y))
    assert (rx.coords, ry.coords) == (xp, yp)


def test_index_and_dimension_errors():
    with pytest.raises(IndexOutOfRangeError):
        pfun(0, A((1, 0)), A((0, 1)))
    with pytest.raises(IndexOutOfRangeError):
        pfun(3, A((1, 0)), A((0, 1)))
    with pytest.raises(DimensionMismatchError):
        apply_r_a(A((1, 0)), A((0, 1, 0)))


@given(pair_a())
def test_p_matches_bruteforce(pair):
    x, y = pair
    assert p_values(x, y) == p_bruteforce(x.coords, y.coords)


@given(pair_a())
def test_r_matches_oracle(pair):
    x, y = pair
    xp, yp = apply_r_a(x, y)
    assert (xp.coords, yp.coords) == r_a_oracle(x.coords, y.coords)


@given(pair_a())
def test_r_is_involutive_and_conserves(pair):
    x, y = pair
    xp, yp = apply_r_a(x, y)
    assert apply_r_a(xp, yp) == (x, y)
    assert (xp.shape, yp.shape) == (y.shape, x.shape)
    for i in range(x.n):
        assert x.coords[i] + y.coords[i] == xp.coords[i] + yp.coords[i]


@given(pair_a())
def test_p_monotone(pair):
    x, y = pair
    P = p_values(x, y)
    n = x.n
    for i in range(n):
        assert P[(i + 1) % n] >= P[i] - y.coords[i]


def test_limit_examples():
    # n = 2, y = (0, 1): p_2 = 1 and p_1 = max(0, 1 - x_1)
    for x1 in range(4):
        assert p_limit_values(A((x1, 7)), A((0, 1))) == (max(0, 1 - x1), 1)
    # vacuum y: p_n = m, p_(n-1) = max(0, m - x_(n-1))
    p = p_limit_values(A((2, 1, 0)), A((0, 0, 3)))
    assert p[2] == 3 and p[1] == max(0, 3 - 1)
    assert pfun_limit(3, A((2, 1, 0)), A((0, 0, 3))) == 3


@given(pair_a())
def test_limit_matches_closed_form(pair):
    x, y = pair
    assert p_limit_values(x, y) == p_limit_closed_form(x.coords, y.coords)


@given(pair_a())
def test_pfun_stabilizes_to_limit(pair):
    x, y = pair
    big = sum(y.coords) + sum(x.coords[:-1]) + 1
    lim = p_limit_values(x, y)
    for xn in (big, big + 1, big + 5):
        xs = A(x.coords[:-1] + (xn,))
        assert p_values(xs, y) == lim


@given(pair_a())
def test_limit_x_prime_is_large_carrier_output(pair):
    x, y = pair
    xs = A(x.coords[:-1] + (sum(y.coords) + sum(x.coords) + 1,))
    xp, _ = apply_r_a(xs, y)
    assert limit_x_prime(xs, y) == xp.coords[:-1]
