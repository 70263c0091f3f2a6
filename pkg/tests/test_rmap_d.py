import pytest
from hypothesis import given

from crystal_automata import (
    Automorphism,
    ElementA,
    ElementD,
    alpha,
    alpha_prime,
    apply_automorphism,
    apply_r_a,
    apply_r_d,
    beta,
    beta_prime,
    p_values,
    vacuum_element,
    vfun,
    vfun_twisted,
    vw_values,
    wfun,
)
from crystal_automata.errors import IndexOutOfRangeError, UnsupportedRankError

from oracles import (
    alpha_oracle,
    alpha_prime_oracle,
    r_d_oracle,
    v_oracle,
    w_oracle,
)
from strategies import element_a, pair_d

D = ElementD


def _raw(x, y):
    return x.upper, x.lower, y.upper, y.lower


def test_alpha_example_vacuum_carrier_letter_one():
    x = vacuum_element(5, 3, "D")
    y = D((1, 0, 0), (0, 0, 0))
    assert alpha(0, 1, x, y) == 1


def test_alpha_empty_sum_branch():
    x, y = D((1, 2, 0), (0, 1, 3)), D((2, 0, 1), (1, 1, 0))
    for i in range(1, 3):
        delta_beta = beta(i, x, y) if i == 2 else 0
        head = max(delta_beta, y.lower[i - 1] - x.upper[i - 1])
        assert alpha(i, i, x, y) == head + x.shape


def test_alpha_prime_diagonal_pair():
    x = D((1, 2, 0), (3, 0, 1))
    # with x = y: l(x) + max(x_1 - xbar_1, 0) + (y_1 - x_1)
    assert alpha_prime(0, 1, x, x) == x.shape + max(1 - 3, 0)


def test_beta_values():
    x, y = D((1, 0, 2), (0, 3, 0)), D((0, 1, 0), (2, 0, 4))
    assert beta(2, x, y) == 0
    assert beta(0, x, y) == 2 - 4
    assert beta(3, x, y) == 0 - 0
    assert beta_prime(3, x, y) == 0 - 0
    assert beta_prime(1, x, y) == 4 - 2
    assert beta_prime(2, x, y) == max(0 - 0, 4 - 4)
    # barred coordinates zero: beta'_(n-1) = y_n
    assert beta_prime(2, D((1, 0, 2), (0, 0, 0)), D((0, 1, 3), (0, 0, 0))) == 3


@given(pair_d())
def test_beta_n_minus_1_is_zero(pair):
    x, y = pair
    assert beta(x.n - 1, x, y) == 0


@given(pair_d())
def test_alpha_terms_match_oracle(pair):
    x, y = pair
    n = x.n
    for i in range(n + 1):
        for j in range(1, n):
            assert alpha(i, j, x, y) == alpha_oracle(i, j, *_raw(x, y))
            assert alpha_prime(i, j, x, y) == alpha_prime_oracle(i, j, *_raw(x, y))


@given(pair_d())
def test_v_and_w_match_oracle(pair):
    x, y = pair
    n = x.n
    for i in range(n + 1):
        assert vfun(i, x, y) == v_oracle(i, *_raw(x, y))
    for i in range(1, n):
        assert wfun(i, x, y) == w_oracle(i, *_raw(x, y))


@given(pair_d())
def test_r_matches_oracle(pair):
    x, y = pair
    xp, yp = apply_r_d(x, y)
    assert (xp.upper, xp.lower, yp.upper, yp.lower) == r_d_oracle(*_raw(x, y))


def test_r_d_frozen_values():
    # frozen from the formula oracle
    xp, yp = apply_r_d(D((0, 1, 0), (1, 0, 0)), D((1, 0, 0), (0, 0, 2)))
    assert (xp.upper, xp.lower) == ((0, 1, 0), (1, 0, 1))
    assert (yp.upper, yp.lower) == ((1, 0, 0), (0, 0, 1))
    xp, yp = apply_r_d(D((0, 2, 3, 1), (1, 0, 0, 0)), D((1, 1, 0, 0), (0, 2, 0, 2)))
    assert (xp.upper, xp.lower) == ((0, 1, 3, 1), (1, 0, 0, 0))
    assert (yp.upper, yp.lower) == ((2, 1, 0, 0), (1, 1, 0, 2))
    vw = vw_values(D((0, 2, 3, 1), (1, 0, 0, 0)), D((1, 1, 0, 0), (0, 2, 0, 2)))
    assert vw.V == (8, 7, 9, 9, 11)
    assert vw.Vstar == (8, 6, 7, 10, 11)
    assert (vw.Vsigma1_0, vw.VsigmaN_n) == (6, 8)
    assert vw.W[1:] == (14, 16, 19)


@given(pair_d())
def test_r_is_involutive_and_conserves_weight(pair):
    x, y = pair
    xp, yp = apply_r_d(x, y)
    assert apply_r_d(xp, yp) == (x, y)
    assert (xp.shape, yp.shape) == (y.shape, x.shape)
    for i in range(x.n):
        assert x.weight()[i] + y.weight()[i] == xp.weight()[i] + yp.weight()[i]


@given(pair_d())
def test_lemma_v_n_minus_1(pair):
    x, y = pair
    n = x.n
    rhs = max(vfun(n, x, y) - y.lower[-1], vfun_twisted(n, "sigmaN", x, y) - y.upper[-1])
    assert vfun(n - 1, x, y) == rhs


@given(pair_d())
def test_twist_invariances(pair):
    x, y = pair
    n = x.n
    W = [wfun(i, x, y) for i in range(1, n)]
    for a, fixed in (("sigma1", range(1, n + 1)), ("star", (0, n)), ("sigmaN", range(n))):
        tx, ty = apply_automorphism(a, x, y)
        for i in fixed:
            assert vfun(i, tx, ty) == vfun(i, x, y)
        assert [wfun(i, tx, ty) for i in range(1, n)] == W
        for i in range(n + 1):
            assert vfun_twisted(i, a, tx, ty) == vfun(i, x, y)


@given(pair_d())
def test_w1_from_v0(pair):
    x, y = pair
    assert wfun(1, x, y) == vfun(0, x, y) + vfun_twisted(0, Automorphism.SIGMA1, x, y)


def test_both_vacuum():
    xp, yp = apply_r_d(vacuum_element(4, 3, "D"), vacuum_element(2, 3, "D"))
    assert xp == vacuum_element(2, 3, "D") and yp == vacuum_element(4, 3, "D")


def test_reduction_example():
    x, y = D((1, 0, 5), (0, 0, 0)), D((0, 1, 0), (0, 0, 0))
    xp, yp = apply_r_d(x, y)
    ap, bp = apply_r_a(ElementA((1, 0, 5)), ElementA((0, 1, 0)))
    assert (xp.upper, yp.upper) == (ap.coords, bp.coords)
    assert not any(xp.lower) and not any(yp.lower)


@given(element_a(n=3), element_a(n=3))
def test_barred_zero_specialization(a, b):
    z = (0,) * a.n
    x, y = D(a.coords, z), D(b.coords, z)
    n = a.n
    P = p_values(a, b)
    lx = a.shape
    vw = vw_values(x, y)
    assert all(v == lx + P[0] for v in vw.V)
    assert vw.Vstar == tuple(lx + P[i % n] for i in range(n + 1))
    assert vw.Vsigma1_0 == lx + P[1]
    assert vw.VsigmaN_n == lx + P[n - 1]
    assert vw.W[1:] == tuple(2 * lx + P[0] + P[i % n] for i in range(1, n))
    xp, yp = apply_r_d(x, y)
    ap, bp = apply_r_a(a, b)
    assert (xp.upper, yp.upper) == (ap.coords, bp.coords)


def test_rank_and_index_errors():
    x, y = D((1, 0), (0, 0)), D((0, 1), (0, 0))
    with pytest.raises(UnsupportedRankError):
        apply_r_d(x, y)
    x, y = D((1, 0, 0), (0, 0, 0)), D((0, 1, 0), (0, 0, 0))
    with pytest.raises(IndexOutOfRangeError):
        vfun(4, x, y)
    with pytest.raises(IndexOutOfRangeError):
        alpha(0, 3, x, y)
    with pytest.raises(IndexOutOfRangeError):
        wfun(0, x, y)
