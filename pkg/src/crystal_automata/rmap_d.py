"""Type-D combinatorial R as a piecewise-linear map.

The map is assembled from the piecewise-linear functions ``V_i`` (``0 <= i <= n``)
and ``W_i`` (``1 <= i <= n-1``) of a pair ``(x, y)``; each ``V_i`` is the maximum
of the ``2(n-1)`` affine-plus-max terms ``alpha_{i,j}`` and ``alpha'_{i,j}``.
Twisted functions ``F^a`` are always obtained by precomposing ``F`` with the
automorphism ``a`` of the pair, never through a separate closed form.

Raw helpers (suffix ``_raw``) take the four coordinate tuples
``(x, xbar, y, ybar)`` and skip validation; they are what the exhaustive sweeps
call.  Everything else takes :class:`~crystal_automata.crystal.ElementD`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crystal import Automorphism, ElementD, twist_raw
from .errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InternalInvariantViolation,
    UnsupportedRankError,
)

__all__ = [
    "VWValues",
    "beta",
    "beta_prime",
    "alpha",
    "alpha_prime",
    "vfun",
    "vfun_twisted",
    "wfun",
    "vw_values",
    "apply_r_d",
    "r_d_raw",
]

STAR = Automorphism.STAR
SIGMA1 = Automorphism.SIGMA1
SIGMAN = Automorphism.SIGMAN


def _check_pair(x, y):
    if x.n != y.n:
        raise DimensionMismatchError(f"n differs: {x.n} vs {y.n}")
    if x.n < 3:
        raise UnsupportedRankError(f"type-D maps need n >= 3, got n={x.n}")


def _raw(x, y):
    return x.upper, x.lower, y.upper, y.lower


def _beta_raw(i, x, xb, y, yb):
    n = len(x)
    if i == n - 1:
        return 0
    if i == n:
        return xb[-1] - y[-1]
    return x[-1] - yb[-1]


def _beta_prime_raw(i, x, xb, y, yb):
    n = len(x)
    if i == n - 1:
        return max(y[-1] - 2 * xb[-1], yb[-1] - 2 * x[-1])
    if i == n:
        return y[-1] - xb[-1]
    return yb[-1] - x[-1]


def _prefix(x, xb, y, yb):
    """Shapes and the two prefix sums used by every alpha term.

    ``s[i] = sum_{k<=i} (ybar_k - xbar_k)`` and ``t[j] = sum_{k<=j} (y_k - x_k)``.
    """
    n = len(x)
    s = [0] * (n + 1)
    t = [0] * (n + 1)
    for k in range(n):
        s[k + 1] = s[k] + yb[k] - xb[k]
        t[k + 1] = t[k] + y[k] - x[k]
    lx = sum(x) + sum(xb)
    ly = sum(y) + sum(yb)
    return lx, ly, s, t


def _alpha_raw(i, j, x, xb, y, yb, pre=None):
    n = len(x)
    lx, ly, s, _ = pre or _prefix(x, xb, y, yb)
    head = _beta_raw(i, x, xb, y, yb) if j == n - 1 else 0
    head = max(head, yb[j - 1] - x[j - 1])
    # both branches reduce to s[i] - s[j]
    return head + (lx if j <= i else ly) + s[i] - s[j]


def _alpha_prime_raw(i, j, x, xb, y, yb, pre=None):
    n = len(x)
    lx, _, s, t = pre or _prefix(x, xb, y, yb)
    head = _beta_prime_raw(i, x, xb, y, yb) if j == n - 1 else 0
    head = max(head, x[j - 1] - yb[j - 1])
    return head + lx + s[i] + t[j]


def v_values_raw(x, xb, y, yb, indices=None):
    """``V_i`` for ``i`` in ``indices`` (default ``0..n``) as a list indexed by i.

    Entries not requested are ``None``.
    """
    n = len(x)
    lx, ly, s, t = _prefix(x, xb, y, yb)
    # max(0, ...) heads for j != n-1 do not depend on i
    heads = [max(0, yb[j] - x[j]) for j in range(n - 1)]
    heads_p = [max(0, x[j] - yb[j]) for j in range(n - 1)]
    tail = yb[n - 2] - x[n - 2]
    tail_p = x[n - 2] - yb[n - 2]
    b_mid = x[-1] - yb[-1]
    bp_mid = yb[-1] - x[-1]
    out = [None] * (n + 1)
    for i in range(n + 1) if indices is None else indices:
        if i == n - 1:
            b, bp = 0, max(y[-1] - 2 * xb[-1], yb[-1] - 2 * x[-1])
        elif i == n:
            b, bp = xb[-1] - y[-1], y[-1] - xb[-1]
        else:
            b, bp = b_mid, bp_mid
        si = s[i]
        best = None
        for j in range(1, n):
            if j == n - 1:
                h = max(b, tail)
                hp = max(bp, tail_p)
            else:
                h = heads[j - 1]
                hp = heads_p[j - 1]
            a = h + (lx if j <= i else ly) + si - s[j]
            ap = hp + lx + si + t[j]
            if ap > a:
                a = ap
            if best is None or a > best:
                best = a
        out[i] = best
    return out


@dataclass(frozen=True)
class VWValues:
    """All intermediate functions the output formula needs.

    ``V`` and ``Vstar`` are indexed ``0..n``; ``W`` is indexed ``0..n-1`` with
    ``W[0] = None`` (it never enters the map).
    """

    V: tuple
    Vstar: tuple
    Vsigma1_0: int
    VsigmaN_n: int
    W: tuple


def vw_raw(x, xb, y, yb):
    n = len(x)
    V = v_values_raw(x, xb, y, yb)
    Vs = v_values_raw(*twist_raw(STAR, x, xb, y, yb))
    v0s1 = v_values_raw(*twist_raw(SIGMA1, x, xb, y, yb), indices=(0,))[0]
    vnsn = v_values_raw(*twist_raw(SIGMAN, x, xb, y, yb), indices=(n,))[n]
    W = [None] * n
    for i in range(1, n - 1):
        W[i] = max(V[i] + Vs[i - 1] - y[i - 1], V[i - 1] + Vs[i] - xb[i - 1]) + min(
            x[i - 1], yb[i - 1]
        )
    W[n - 1] = V[n] + vnsn
    return VWValues(tuple(V), tuple(Vs), v0s1, vnsn, tuple(W))


def r_d_raw(x, xb, y, yb, vw=None):
    """Unchecked type-D R on raw tuples; returns ``(x', xbar', y', ybar')``."""
    n = len(x)
    if vw is None:
        vw = vw_raw(x, xb, y, yb)
    V, Vs, v0s1, vnsn, W = vw.V, vw.Vstar, vw.Vsigma1_0, vw.VsigmaN_n, vw.W
    xp = [0] * n
    xbp = [0] * n
    yp = [0] * n
    ybp = [0] * n
    xp[0] = y[0] + v0s1 - V[1]
    ybp[0] = xb[0] + v0s1 - Vs[1]
    for i in range(2, n):
        dw = W[i] - W[i - 1]
        xp[i - 1] = y[i - 1] + V[i - 1] - V[i] + dw
        ybp[i - 1] = xb[i - 1] + Vs[i - 1] - Vs[i] + dw
    xp[n - 1] = y[n - 1] + V[n - 1] - vnsn
    ybp[n - 1] = xb[n - 1] + Vs[n - 1] - vnsn
    for i in range(1, n + 1):
        xbp[i - 1] = yb[i - 1] + V[i - 1] - V[i]
        yp[i - 1] = x[i - 1] + Vs[i - 1] - Vs[i]
    return tuple(xp), tuple(xbp), tuple(yp), tuple(ybp)


def beta(i, x, y):
    _check_pair(x, y)
    _check_i(i, x.n)
    return _beta_raw(i, *_raw(x, y))


def beta_prime(i, x, y):
    _check_pair(x, y)
    _check_i(i, x.n)
    return _beta_prime_raw(i, *_raw(x, y))


def _check_i(i, n, lo=0, hi=None):
    hi = n if hi is None else hi
    if not lo <= i <= hi:
        raise IndexOutOfRangeError(f"index {i} outside {lo}..{hi}")


def alpha(i, j, x, y):
    """``alpha_{i,j}(x, y)`` for ``0 <= i <= n`` and ``1 <= j <= n-1``."""
    _check_pair(x, y)
    _check_i(i, x.n)
    _check_i(j, x.n, 1, x.n - 1)
    return _alpha_raw(i, j, *_raw(x, y))


def alpha_prime(i, j, x, y):
    """``alpha'_{i,j}(x, y)`` for ``0 <= i <= n`` and ``1 <= j <= n-1``."""
    _check_pair(x, y)
    _check_i(i, x.n)
    _check_i(j, x.n, 1, x.n - 1)
    return _alpha_prime_raw(i, j, *_raw(x, y))


def vfun(i, x, y):
    """``V_i(x, y) = max_j max(alpha_{i,j}, alpha'_{i,j})``."""
    _check_pair(x, y)
    _check_i(i, x.n)
    return v_values_raw(*_raw(x, y), indices=(i,))[i]


def vfun_twisted(i, a, x, y):
    """``V_i^a(x, y) = V_i(a(x, y))``."""
    _check_pair(x, y)
    _check_i(i, x.n)
    tw = twist_raw(Automorphism(a), *_raw(x, y))
    return v_values_raw(*tw, indices=(i,))[i]


def wfun(i, x, y):
    """``W_i(x, y)`` for ``1 <= i <= n-1``."""
    _check_pair(x, y)
    _check_i(i, x.n, 1, x.n - 1)
    return vw_raw(*_raw(x, y)).W[i]


def vw_values(x, y):
    _check_pair(x, y)
    return vw_raw(*_raw(x, y))


def apply_r_d(x, y):
    """Apply the type-D combinatorial R to ``(x, y)``; returns ``(x', y')``.

    ``x'`` has the shape of ``y`` and ``y'`` the shape of ``x``.
    """
    _check_pair(x, y)
    xp, xbp, yp, ybp = r_d_raw(*_raw(x, y))
    bad = (
        min(xp + xbp + yp + ybp) < 0
        or xp[-1] * xbp[-1] != 0
        or yp[-1] * ybp[-1] != 0
    )
    if bad:
        raise InternalInvariantViolation(
            f"R({x}, {y}) produced an invalid pair {xp}|{xbp}, {yp}|{ybp}"
        )
    return ElementD(xp, xbp), ElementD(yp, ybp)
