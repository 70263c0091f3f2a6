import pytest
from hypothesis import given
from hypothesis import strategies as st

from crystal_automata import (
    ElementA,
    ElementD,
    apply_r_d,
    limit_profile,
    p_limit_values,
    rhs_theorem51,
    saturate,
    saturation_point,
    vlim_direct,
    vlim_recursive,
    wlim,
)
from crystal_automata.errors import ConstraintViolationError, IndexOutOfRangeError

from oracles import twist, v_oracle, w_oracle
from strategies import carrier_head_d, element_d

D = ElementD


@st.composite
def limit_pair(draw, n=None):
    n = draw(st.integers(3, 4)) if n is None else n
    x, xb = draw(carrier_head_d(n, 2))
    y = draw(element_d(n, 2))
    return D(x[:-1] + (1,), xb), y


def _oracle_limits(x, y):
    """Normalized V values at a generous x_n, evaluated by the formula oracle."""
    n = x.n
    big = 3 * saturation_point(x, y) + 5
    xs = x.upper[:-1] + (big,)
    raw = (xs, x.lower, y.upper, y.lower)
    lx = sum(xs) + sum(x.lower)
    v = tuple(v_oracle(i, *raw) - lx for i in range(n + 1))
    vs = tuple(v_oracle(i, *twist("star", *raw)) - lx for i in range(n + 1))
    v0s1 = v_oracle(0, *twist("sigma1", *raw)) - lx
    vnsn = v_oracle(n, *twist("sigmaN", *raw)) - lx
    w = tuple(w_oracle(i, *raw) - 2 * lx for i in range(1, n))
    return v, vs, v0s1, vnsn, w


@given(limit_pair())
def test_recursive_matches_oracle(pair):
    x, y = pair
    prof = limit_profile(x, y)
    v, vs, v0s1, vnsn, w = _oracle_limits(x, y)
    assert prof.v == v and prof.vstar == vs
    assert (prof.vsigma1_0, prof.vsigmaN_n) == (v0s1, vnsn)
    assert prof.w[1:] == w and prof.w[0] == 2 * prof.v[0]


@given(limit_pair())
def test_direct_equals_recursive(pair):
    x, y = pair
    assert limit_profile(x, y, "direct") == limit_profile(x, y, "recursive")
    n = x.n
    for i in range(n + 1):
        for variant in ("plain", "star"):
            assert vlim_direct(i, variant, x, y) == vlim_recursive(i, variant, x, y)
    assert vlim_direct(0, "sigma1_0", x, y) == vlim_recursive(0, "sigma1_0", x, y)
    assert vlim_direct(n, "sigmaN_n", x, y) == vlim_recursive(n, "sigmaN_n", x, y)
    for i in range(n):
        assert wlim(i, x, y, "direct") == wlim(i, x, y)


@given(limit_pair())
def test_endpoint_identities(pair):
    x, y = pair
    n = x.n
    p = limit_profile(x, y)
    assert p.vsigmaN_n == p.vstar[n - 1] == y.upper[-1] - y.lower[-1]
    assert p.v[0] == p.vstar[0]
    assert p.w[n - 1] == p.v[n] + p.vsigmaN_n
    assert p.w[1] == p.v[0] + p.vsigma1_0


def test_frozen_profiles():
    # frozen from the formula oracle at large x_n
    p = limit_profile(D((1, 0, 9), (0, 1, 0)), D((0, 0, 0), (0, 0, 2)))
    assert p.v == (0, 0, 0, 2) and p.vstar == (0, 0, -2, 2)
    assert (p.vsigma1_0, p.vsigmaN_n, p.w) == (0, -2, (0, 0, 0))
    p = limit_profile(D((2, 1, 9), (1, 0, 0)), D((0, 1, 1), (1, 0, 0)))
    assert p.v == (-1, 0, 0, 0) and p.vstar == (-1, 1, 1, 0)
    assert (p.vsigma1_0, p.vsigmaN_n, p.w) == (1, 1, (-2, 0, 1))


def test_vacuum_box_chain():
    x = D((2, 1, 9), (1, 3, 0))
    y = D((0, 0, 4), (0, 0, 0))
    assert vlim_recursive(2, "star", x, y) == 4


@given(
    st.tuples(
        st.lists(st.integers(0, 3), min_size=3, max_size=3),
        st.lists(st.integers(0, 3), min_size=3, max_size=3).filter(any),
    )
)
def test_barred_zero_vstar_is_type_a_limit(pair):
    a, b = pair
    x = D(tuple(a[:-1]) + (1,), (0, 0, 0))
    y = D(tuple(b), (0, 0, 0))
    p = p_limit_values(ElementA(x.upper), ElementA(y.upper))
    vs = limit_profile(x, y).vstar
    assert vs[:3] == p


@given(limit_pair())
def test_rhs_matches_saturated_r(pair):
    x, y = pair
    xs = saturate(x, saturation_point(x, y))
    xp, yp = apply_r_d(xs, y)
    for method in ("recursive", "direct"):
        assert rhs_theorem51(xs, y, method) == (xp.upper, xp.lower, yp.upper, yp.lower)
    assert yp.lower[-1] == 0


def test_limit_requires_xbar_n_zero():
    with pytest.raises(ConstraintViolationError):
        limit_profile(D((1, 0, 0), (0, 0, 1)), D((0, 1, 0), (0, 0, 0)))


def test_variant_index_errors():
    x, y = D((1, 0, 5), (0, 0, 0)), D((0, 1, 0), (0, 0, 0))
    with pytest.raises(IndexOutOfRangeError):
        vlim_direct(1, "sigma1_0", x, y)
    with pytest.raises(IndexOutOfRangeError):
        vlim_recursive(2, "sigmaN_n", x, y)
    with pytest.raises(ValueError):
        vlim_direct(0, "bogus", x, y)
    with pytest.raises(IndexOutOfRangeError):
        wlim(3, x, y)
