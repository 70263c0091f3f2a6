"""Crystal elements of types A and D, the involutive automorphisms, and carriers.

A type-A element of shape ``l`` is a vector ``(x_1, ..., x_n)`` of non-negative
integers summing to ``l``.  A type-D element carries a second, "barred" vector
``(xbar_1, ..., xbar_n)``; the two together sum to ``l`` and ``x_n * xbar_n == 0``.

Indices in docstrings are 1-based to match the usual notation; the tuples
themselves are ordinary 0-based Python tuples.

Letters of capacity-1 elements are encoded as signed integers: ``a`` for the
unbarred letter ``a`` and ``-a`` for ``abar``.  The vacuum letter is ``n``.
"""

from __future__ import annotations

import enum
import numbers
from dataclasses import dataclass

from .errors import (
    ConstraintViolationError,
    DimensionMismatchError,
    EmptyVectorError,
    InvalidShapeError,
    LengthMismatchError,
    MarginTooSmallError,
    NegativeCoordinateError,
)

__all__ = [
    "ElementA",
    "ElementD",
    "Automorphism",
    "CarrierSpec",
    "make_element_a",
    "make_element_d",
    "apply_automorphism",
    "vacuum_element",
    "letter_element",
    "default_margin",
    "make_carrier",
]


def _as_int_tuple(values, name):
    values = tuple(values)
    for v in values:
        if not isinstance(v, numbers.Integral) or isinstance(v, bool):
            raise TypeError(f"{name} entries must be integers, got {v!r}")
    return tuple(int(v) for v in values)


@dataclass(frozen=True)
class ElementA:
    """Element of the type-A crystal ``B_l``."""

    coords: tuple

    def __post_init__(self):
        coords = _as_int_tuple(self.coords, "coords")
        if len(coords) == 0:
            raise EmptyVectorError("element needs at least one coordinate")
        if len(coords) < 2:
            raise DimensionMismatchError(f"n must be >= 2, got {len(coords)}")
        for k, v in enumerate(coords, start=1):
            if v < 0:
                raise NegativeCoordinateError(f"x_{k} = {v} is negative")
        if sum(coords) == 0:
            raise InvalidShapeError("shape must be >= 1")
        object.__setattr__(self, "coords", coords)

    kind = "A"

    @property
    def n(self):
        return len(self.coords)

    @property
    def shape(self):
        return sum(self.coords)

    def __getitem__(self, i):
        """1-based access ``x[i] == x_i``."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return self.coords[i - 1]

    def is_vacuum(self):
        return all(v == 0 for v in self.coords[:-1])

    def __str__(self):
        return "(" + ",".join(map(str, self.coords)) + ")"


@dataclass(frozen=True)
class ElementD:
    """Element of the type-D crystal ``B_l``: unbarred and barred coordinates."""

    upper: tuple
    lower: tuple

    def __post_init__(self):
        upper = _as_int_tuple(self.upper, "upper")
        lower = _as_int_tuple(self.lower, "lower")
        if len(upper) == 0 or len(lower) == 0:
            raise EmptyVectorError("element needs at least one coordinate")
        if len(upper) != len(lower):
            raise LengthMismatchError(
                f"upper has {len(upper)} entries, lower has {len(lower)}"
            )
        if len(upper) < 2:
            raise DimensionMismatchError(f"n must be >= 2, got {len(upper)}")
        for k, v in enumerate(upper, start=1):
            if v < 0:
                raise NegativeCoordinateError(f"x_{k} = {v} is negative")
        for k, v in enumerate(lower, start=1):
            if v < 0:
                raise NegativeCoordinateError(f"xbar_{k} = {v} is negative")
        if upper[-1] * lower[-1] != 0:
            raise ConstraintViolationError(
                f"x_n = {upper[-1]} and xbar_n = {lower[-1]} are both nonzero"
            )
        if sum(upper) + sum(lower) == 0:
            raise InvalidShapeError("shape must be >= 1")
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "lower", lower)

    kind = "D"

    @property
    def n(self):
        return len(self.upper)

    @property
    def shape(self):
        return sum(self.upper) + sum(self.lower)

    def bar(self, i):
        """1-based barred coordinate ``xbar_i``."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return self.lower[i - 1]

    def __getitem__(self, i):
        """1-based access; negative ``i`` reads the barred coordinate."""
        if i < 0:
            return self.bar(-i)
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return self.upper[i - 1]

    def is_vacuum(self):
        return all(v == 0 for v in self.upper[:-1]) and not any(self.lower)

    def weight(self):
        """Componentwise ``x_i - xbar_i``."""
        return tuple(u - b for u, b in zip(self.upper, self.lower))

    def __str__(self):
        return (
            "("
            + ",".join(map(str, self.upper))
            + "|"
            + ",".join(map(str, self.lower))
            + ")"
        )


def make_element_a(coords):
    return ElementA(tuple(coords))


def make_element_d(upper, lower):
    return ElementD(tuple(upper), tuple(lower))


class Automorphism(enum.Enum):
    """The three involutions acting on a pair ``(x, y)`` of type-D elements."""

    STAR = "star"
    SIGMA1 = "sigma1"
    SIGMAN = "sigmaN"


def twist_raw(a, x, xb, y, yb):
    """Apply an automorphism to raw coordinate tuples ``(x, xbar, y, ybar)``."""
    if a is Automorphism.STAR:
        return yb, y, xb, x
    if a is Automorphism.SIGMA1:
        return (xb[0],) + x[1:], (x[0],) + xb[1:], (yb[0],) + y[1:], (y[0],) + yb[1:]
    if a is Automorphism.SIGMAN:
        return x[:-1] + (xb[-1],), xb[:-1] + (x[-1],), y[:-1] + (yb[-1],), yb[:-1] + (y[-1],)
    raise TypeError(f"not an automorphism: {a!r}")


def apply_automorphism(a, x, y):
    """Return the image of the pair ``(x, y)`` under ``a``.

    ``STAR`` exchanges ``x_i <-> ybar_i`` and ``xbar_i <-> y_i`` (hence swaps
    the shapes), ``SIGMA1`` exchanges the first unbarred and barred coordinate
    of each factor and ``SIGMAN`` does the same for the last one.
    """
    a = Automorphism(a)
    if x.n != y.n:
        raise DimensionMismatchError(f"n differs: {x.n} vs {y.n}")
    nx, nxb, ny, nyb = twist_raw(a, x.upper, x.lower, y.upper, y.lower)
    return ElementD(nx, nxb), ElementD(ny, nyb)


def vacuum_element(l, n, kind="A"):
    """Element of shape ``l`` with all its mass on the vacuum coordinate ``x_n``."""
    if l < 1:
        raise InvalidShapeError(f"shape must be >= 1, got {l}")
    if n < 2:
        raise DimensionMismatchError(f"n must be >= 2, got {n}")
    upper = (0,) * (n - 1) + (l,)
    if kind == "A":
        return ElementA(upper)
    if kind == "D":
        return ElementD(upper, (0,) * n)
    raise ValueError(f"kind must be 'A' or 'D', got {kind!r}")


def letter_element(letter, n, kind="A"):
    """Capacity-1 element for a signed letter (``-a`` meaning ``abar``)."""
    if letter == 0 or abs(letter) > n:
        raise ValueError(f"letter {letter} out of range for n={n}")
    upper = [0] * n
    lower = [0] * n
    if letter > 0:
        upper[letter - 1] = 1
    else:
        if kind == "A":
            raise ValueError("type A has no barred letters")
        lower[-letter - 1] = 1
    if kind == "A":
        return ElementA(tuple(upper))
    return ElementD(tuple(upper), tuple(lower))


def default_margin(capacities):
    return sum(capacities)


@dataclass(frozen=True)
class CarrierSpec:
    """A carrier element together with the margin that certifies it is "large".

    The vacuum coordinate must dominate every other coordinate by at least
    ``vacuum_margin``; a type-D carrier must also have ``xbar_n == 0``.
    """

    element: object
    vacuum_margin: int = 0

    def __post_init__(self):
        e = self.element
        if self.vacuum_margin < 0:
            raise ValueError("vacuum_margin must be non-negative")
        if isinstance(e, ElementD):
            if e.lower[-1] != 0:
                raise MarginTooSmallError("type-D carrier needs xbar_n == 0")
            others = e.upper[:-1] + e.lower[:-1]
        elif isinstance(e, ElementA):
            others = e.coords[:-1]
        else:
            raise TypeError(f"carrier element must be ElementA or ElementD, got {e!r}")
        need = self.vacuum_margin + max(others, default=0)
        if e[e.n] < need:
            raise MarginTooSmallError(
                f"x_n = {e[e.n]} is below the required {need}"
            )

    @property
    def kind(self):
        return self.element.kind

    @property
    def n(self):
        return self.element.n

    def with_vacuum(self, xn):
        """Same carrier with its vacuum coordinate replaced by ``xn``."""
        e = self.element
        if isinstance(e, ElementD):
            new = ElementD(e.upper[:-1] + (xn,), e.lower)
        else:
            new = ElementA(e.coords[:-1] + (xn,))
        return CarrierSpec(new, 0)


def make_carrier(kind, n, capacities, coords=None, lower=None, xn=None):
    """Build a carrier for a state with the given site capacities.

    ``coords`` (and ``lower`` for type D) give the non-vacuum coordinates,
    i.e. ``x_1..x_{n-1}`` (and ``xbar_1..xbar_{n-1}``); omitted means zero.
    The vacuum coordinate defaults to ``sum(capacities) + sum(others) + 1``.
    """
    coords = tuple(coords) if coords is not None else (0,) * (n - 1)
    if len(coords) != n - 1:
        raise DimensionMismatchError(f"expected {n - 1} non-vacuum coordinates")
    if kind == "D":
        lower = tuple(lower) if lower is not None else (0,) * (n - 1)
        if len(lower) != n - 1:
            raise DimensionMismatchError(f"expected {n - 1} barred coordinates")
    else:
        lower = ()
    margin = default_margin(capacities)
    if xn is None:
        xn = margin + sum(coords) + sum(lower) + 1
    if kind == "D":
        element = ElementD(coords + (xn,), lower + (0,))
    elif kind == "A":
        element = ElementA(coords + (xn,))
    else:
        raise ValueError(f"kind must be 'A' or 'D', got {kind!r}")
    return CarrierSpec(element, margin)
