"""Normalized large-carrier limits of the type-D functions.

For a function ``F(x, y)`` the two normalized limits are

    lim*  F = lim_{x_n -> oo, xbar_n = 0} (F(x, y) -  l(x))
    lim** F = lim_{x_n -> oo, xbar_n = 0} (F(x, y) - 2l(x))

and we write ``v_i = lim* V_i``, ``v_i^a = lim* V_i^a``, ``w_i = lim** W_i``.
Twisting happens before the limit is taken; for ``a = star`` or ``sigmaN``
this is not the same as twisting the limit function.

Two independent routes are provided:

* ``direct``: evaluate the finite functions at ``x_n = M`` and ``x_n = M + 1``
  and require the normalized values to agree (a two-point stabilization
  witness). ``M`` starts at one more than the sum of every other coordinate
  and is doubled on failure, up to a fixed number of retries.
* ``recursive``: closed recursions in which ``x_n`` never appears.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crystal import Automorphism, ElementD, twist_raw
from .errors import (
    ConstraintViolationError,
    DimensionMismatchError,
    IndexOutOfRangeError,
    NotStabilizedError,
    UnsupportedRankError,
)
from .rmap_d import v_values_raw, vw_raw

__all__ = [
    "LimitProfile",
    "VARIANTS",
    "saturation_point",
    "saturate",
    "limit_profile_direct",
    "limit_profile_recursive",
    "limit_profile",
    "vlim_direct",
    "vlim_recursive",
    "wlim",
    "rhs_theorem51",
    "rhs_raw",
    "descending_gamma_instance",
    "ascending_gamma_instance",
]

VARIANTS = ("plain", "star", "sigma1_0", "sigmaN_n")
MAX_DOUBLINGS = 8


@dataclass(frozen=True)
class LimitProfile:
    """``v`` and ``vstar`` indexed ``0..n``; ``w`` indexed ``0..n-1`` with ``w[0] = 2 v[0]``."""

    v: tuple
    vstar: tuple
    vsigma1_0: int
    vsigmaN_n: int
    w: tuple


def _check(x, y):
    if x.n != y.n:
        raise DimensionMismatchError(f"n differs: {x.n} vs {y.n}")
    if x.n < 3:
        raise UnsupportedRankError(f"type-D maps need n >= 3, got n={x.n}")
    if x.lower[-1] != 0:
        raise ConstraintViolationError("the limit needs xbar_n == 0")


def saturation_point(x, y):
    """A carrier size ``x_n`` from which R agrees with its ``x_n -> oo`` limit.

    Every coordinate except ``x_n`` is counted, with the box ``y`` counted
    twice: a bound state in ``y`` is carried as a pair of letters, so ``y'_n``
    only becomes non-negative once ``x_n`` absorbs both.
    """
    return _saturation_raw(x.upper, x.lower, y.upper, y.lower)


def _saturation_raw(x, xb, y, yb):
    return sum(x[:-1]) + sum(xb) + 2 * (sum(y) + sum(yb)) + 1


def saturate(x, xn):
    """Copy of ``x`` with ``x_n`` replaced by ``xn``."""
    return ElementD(x.upper[:-1] + (xn,), x.lower)


def _normalized_direct(x, xb, y, yb, xn):
    xs = x[:-1] + (xn,)
    lx = sum(xs) + sum(xb)
    vw = vw_raw(xs, xb, y, yb)
    v = tuple(val - lx for val in vw.V)
    vs = tuple(val - lx for val in vw.Vstar)
    w = (None,) + tuple(val - 2 * lx for val in vw.W[1:])
    return v, vs, vw.Vsigma1_0 - lx, vw.VsigmaN_n - lx, w


def _direct_raw(x, xb, y, yb):
    m = _saturation_raw(x, xb, y, yb)
    for _ in range(MAX_DOUBLINGS + 1):
        lo = _normalized_direct(x, xb, y, yb, m)
        hi = _normalized_direct(x, xb, y, yb, m + 1)
        if lo == hi:
            v, vs, v0s1, vnsn, w = lo
            return LimitProfile(v, vs, v0s1, vnsn, (2 * v[0],) + w[1:])
        m *= 2
    raise NotStabilizedError(
        f"normalized V/W values still move at x_n = {m // 2}"
    )


def limit_profile_direct(x, y):
    """All limits by finite saturation with a two-point witness."""
    _check(x, y)
    return _direct_raw(x.upper, x.lower, y.upper, y.lower)


def _vstar_chain(x, xb, y, yb):
    """``v*_{n-1}, ..., v*_0`` by the descending recursion; returns list ``0..n-1``."""
    n = len(x)
    vs = [0] * n
    vs[n - 1] = y[-1] - yb[-1]
    for i in range(n - 1, 0, -1):
        vs[i - 1] = y[i - 1] - x[i - 1] + max(vs[i], x[i - 1] - yb[i - 1], 0)
    return vs


def _recursive_raw(x, xb, y, yb):
    n = len(x)
    vs = _vstar_chain(x, xb, y, yb)
    v = [0] * (n + 1)
    # V_0 is star-invariant, so v_0 = v*_0 closes the ascending recursion
    v[0] = vs[0]
    for i in range(1, n):
        v[i] = max(yb[i - 1] - xb[i - 1] + v[i - 1], yb[i - 1] - x[i - 1], 0)
    v[n] = yb[-1] - y[-1] + max(
        y[-1] + yb[n - 2] - xb[n - 2] + v[n - 2],
        y[-1] + yb[n - 2] - x[n - 2],
        0,
    )
    # V_n is star-invariant as well
    vstar = tuple(vs) + (v[n],)
    v0s1 = _vstar_chain(*twist_raw(Automorphism.SIGMA1, x, xb, y, yb))[0]
    vnsn = y[-1] - yb[-1]
    w = [2 * v[0]]
    for i in range(1, n):
        w.append(
            v[i]
            + vstar[i]
            - min(vstar[i] - vstar[i - 1] + y[i - 1], v[i] - v[i - 1] + xb[i - 1])
            + min(x[i - 1], yb[i - 1])
        )
    return LimitProfile(tuple(v), vstar, v0s1, vnsn, tuple(w))


def limit_profile_recursive(x, y):
    """All limits from the closed recursions (``x_n`` is never read)."""
    _check(x, y)
    return _recursive_raw(x.upper, x.lower, y.upper, y.lower)


def limit_profile(x, y, method="recursive"):
    if method == "recursive":
        return limit_profile_recursive(x, y)
    if method == "direct":
        return limit_profile_direct(x, y)
    raise ValueError(f"unknown method {method!r}")


def _pick(prof, i, variant, n):
    if variant == "plain":
        return prof.v[i]
    if variant == "star":
        return prof.vstar[i]
    if variant == "sigma1_0":
        if i != 0:
            raise IndexOutOfRangeError("sigma1_0 is only defined at i = 0")
        return prof.vsigma1_0
    if variant == "sigmaN_n":
        if i != n:
            raise IndexOutOfRangeError("sigmaN_n is only defined at i = n")
        return prof.vsigmaN_n
    raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


def _check_i(i, n):
    if not 0 <= i <= n:
        raise IndexOutOfRangeError(f"index {i} outside 0..{n}")


def vlim_direct(i, variant, x, y):
    """``lim* V_i^a`` by saturation; raises NotStabilizedError if the witness fails."""
    _check(x, y)
    _check_i(i, x.n)
    a = {
        "plain": None,
        "star": Automorphism.STAR,
        "sigma1_0": Automorphism.SIGMA1,
        "sigmaN_n": Automorphism.SIGMAN,
    }.get(variant, "?")
    if a == "?":
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if variant == "sigma1_0" and i != 0:
        raise IndexOutOfRangeError("sigma1_0 is only defined at i = 0")
    if variant == "sigmaN_n" and i != x.n:
        raise IndexOutOfRangeError("sigmaN_n is only defined at i = n")
    xr, xb, y_, yb = x.upper, x.lower, y.upper, y.lower
    m = saturation_point(x, y)
    for _ in range(MAX_DOUBLINGS + 1):
        vals = []
        for xn in (m, m + 1):
            xs = xr[:-1] + (xn,)
            args = (xs, xb, y_, yb) if a is None else twist_raw(a, xs, xb, y_, yb)
            vals.append(v_values_raw(*args, indices=(i,))[i] - (sum(xs) + sum(xb)))
        if vals[0] == vals[1]:
            return vals[0]
        m *= 2
    raise NotStabilizedError(f"lim* of V_{i} ({variant}) did not stabilize")


def vlim_recursive(i, variant, x, y):
    """``lim* V_i^a`` from the closed recursions."""
    _check(x, y)
    _check_i(i, x.n)
    return _pick(limit_profile_recursive(x, y), i, variant, x.n)


def wlim(i, x, y, method="formula"):
    """``w_i = lim** W_i`` for ``0 <= i <= n-1`` (``w_0 = 2 v_0`` by convention)."""
    _check(x, y)
    if not 0 <= i <= x.n - 1:
        raise IndexOutOfRangeError(f"index {i} outside 0..{x.n - 1}")
    if method == "formula":
        return limit_profile_recursive(x, y).w[i]
    if method == "direct":
        return limit_profile_direct(x, y).w[i]
    raise ValueError(f"unknown method {method!r}")


def rhs_raw(x, xb, y, yb, prof):
    """Evaluate the output display in terms of the limit functions.

    Uses the actual ``x_n`` of ``x`` for ``y'_n``.  Returns
    ``(x', xbar', y', ybar')`` as tuples.
    """
    n = len(x)
    v, vs, v0s1, vnsn, w = prof.v, prof.vstar, prof.vsigma1_0, prof.vsigmaN_n, prof.w
    xp = [0] * n
    xbp = [0] * n
    yp = [0] * n
    ybp = [0] * n
    xp[0] = y[0] + v0s1 - v[1]
    ybp[0] = xb[0] + v0s1 - vs[1]
    for i in range(2, n):
        dw = w[i] - w[i - 1]
        xp[i - 1] = y[i - 1] + v[i - 1] - v[i] + dw
        ybp[i - 1] = xb[i - 1] + vs[i - 1] - vs[i] + dw
    xp[n - 1] = y[n - 1] + v[n - 1] - vnsn
    ybp[n - 1] = xb[n - 1] + vs[n - 1] - vnsn
    for i in range(1, n + 1):
        xbp[i - 1] = yb[i - 1] + v[i - 1] - v[i]
        yp[i - 1] = x[i - 1] + vs[i - 1] - vs[i]
    return tuple(xp), tuple(xbp), tuple(yp), tuple(ybp)


def rhs_theorem51(x, y, method="recursive"):
    """Right-hand side of the factorized output formula for a saturated carrier ``x``.

    ``x`` must have ``xbar_n == 0`` and a large ``x_n`` (its value only enters
    ``y'_n``).  Returns the coordinate tuples ``(x', xbar', y', ybar')``.
    """
    prof = limit_profile(x, y, method)
    return rhs_raw(x.upper, x.lower, y.upper, y.lower, prof)


def descending_gamma_instance(i, x, xb, y, yb, prof):
    """Inputs ``(A..E)`` and predicted outputs ``(F..J)`` of the i-th descending step.

    ``1 <= i <= n-1``; ``x`` must already be saturated (``x_n`` large).
    """
    m_i = min(x[i - 1], yb[i - 1])
    m_next = min(x[i], yb[i])
    vs = prof.vstar
    inputs = (yb[i - 1], m_next, vs[i] + m_next, y[i - 1], x[i - 1])
    expected = (
        m_i,
        yb[i - 1] - m_i + m_next,
        -m_i + m_next + y[i - 1] + vs[i] - vs[i - 1],
        vs[i - 1] + m_i,
        x[i - 1] + vs[i - 1] - vs[i],
    )
    return inputs, expected


def ascending_gamma_instance(i, x, xb, y, yb, prof):
    """Inputs ``(A..E)`` and predicted outputs ``(F..J)`` of the i-th ascending step."""
    m_i = min(x[i - 1], yb[i - 1])
    m_next = min(x[i], yb[i])
    v, vs, w = prof.v, prof.vstar, prof.w
    inputs = (
        v[i - 1] + m_i,
        yb[i - 1] - m_i + m_next,
        -m_i + m_next + y[i - 1] + vs[i] - vs[i - 1],
        m_i + v[i - 1] + vs[i - 1] - w[i - 1],
        xb[i - 1],
    )
    expected = (
        yb[i - 1] + v[i - 1] - v[i],
        v[i] + m_next,
        m_next + v[i] + vs[i] - w[i],
        y[i - 1] + w[i] - w[i - 1] - v[i] + v[i - 1],
        xb[i - 1] + w[i] - w[i - 1] - vs[i] + vs[i - 1],
    )
    return inputs, expected
