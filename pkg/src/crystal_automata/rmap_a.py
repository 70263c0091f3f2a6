"""Type-A combinatorial R as a piecewise-linear map, and its large-carrier limit.

For ``x`` in ``B_l`` and ``y`` in ``B_m`` the map sends ``(x, y)`` to
``(x', y')`` in ``B_m x B_l`` with

    x'_i = y_i + P_{i+1} - P_i,     y'_i = x_i + P_i - P_{i+1},

    P_i = max_{1<=j<=n} ( sum_{k=1}^{j-1} (y_{k+i-1} - x_{k+i-1}) + y_{j+i-1} ),

all subscripts read cyclically in ``1..n``.
"""

from __future__ import annotations

from .crystal import ElementA
from .errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InternalInvariantViolation,
)

__all__ = [
    "pfun",
    "p_values",
    "apply_r_a",
    "r_a_raw",
    "pfun_limit",
    "p_limit_values",
    "limit_x_prime",
]


def _check_pair(x, y):
    if x.n != y.n:
        raise DimensionMismatchError(f"n differs: {x.n} vs {y.n}")


def _check_index(i, n):
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"index {i} outside 1..{n}")


def p_values_raw(x, y):
    """``[P_1, ..., P_n]`` for raw coordinate tuples."""
    n = len(x)
    out = []
    for i in range(n):
        best = y[i]
        run = 0
        for j in range(n):
            k = (i + j) % n
            cand = run + y[k]
            if cand > best:
                best = cand
            run += y[k] - x[k]
        out.append(best)
    return out


def pfun(i, x, y):
    """``P_i(x, y)`` with ``1 <= i <= n``."""
    _check_pair(x, y)
    _check_index(i, x.n)
    return p_values_raw(x.coords, y.coords)[i - 1]


def p_values(x, y):
    _check_pair(x, y)
    return tuple(p_values_raw(x.coords, y.coords))


def r_a_raw(x, y):
    """Unchecked R on raw tuples; returns ``(x', y')`` as tuples."""
    n = len(x)
    p = p_values_raw(x, y)
    xp = tuple(y[i] + p[(i + 1) % n] - p[i] for i in range(n))
    yp = tuple(x[i] + p[i] - p[(i + 1) % n] for i in range(n))
    return xp, yp


def apply_r_a(x, y):
    """Apply the type-A combinatorial R to ``(x, y)``; returns ``(x', y')``."""
    _check_pair(x, y)
    xp, yp = r_a_raw(x.coords, y.coords)
    if min(xp) < 0 or min(yp) < 0:
        raise InternalInvariantViolation(
            f"R({x}, {y}) produced negative coordinates {xp}, {yp}"
        )
    return ElementA(xp), ElementA(yp)


def p_limit_values_raw(x, y):
    """``[p_1, ..., p_n]`` by the descending recursion ``p_i = y_i + max(0, p_{i+1} - x_i)``."""
    n = len(x)
    p = [0] * n
    p[n - 1] = y[n - 1]
    for i in range(n - 2, -1, -1):
        p[i] = max(y[i], y[i] - x[i] + p[i + 1])
    return p


def pfun_limit(i, x, y):
    """Limit of ``P_i`` as ``x_n`` grows without bound.

    The value of ``x_n`` itself is never read.
    """
    _check_pair(x, y)
    _check_index(i, x.n)
    return p_limit_values_raw(x.coords, y.coords)[i - 1]


def p_limit_values(x, y):
    _check_pair(x, y)
    return tuple(p_limit_values_raw(x.coords, y.coords))


def limit_x_prime(x, y):
    """``x'_i = min(p_{i+1}, x_i)`` for ``1 <= i <= n-1`` (large-carrier regime).

    In the particle picture this is the number of ``i``-balls left in the box
    after the carriers ``K_{n-1}, ..., K_i`` have passed.
    """
    _check_pair(x, y)
    p = p_limit_values_raw(x.coords, y.coords)
    return tuple(min(p[i + 1], x.coords[i]) for i in range(x.n - 1))
