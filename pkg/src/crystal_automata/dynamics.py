"""The cellular automaton: R-based evolution and its particle/antiparticle factorization.

A state is a row of boxes (sites) of capacities ``l_1, ..., l_N``.  One time
step threads a large carrier through the row with the combinatorial R.  The
same step can be computed by expanding every box into capacity-1 cells
(``P``), sweeping a carrier for each ball species across the cells
(``K_a``), rearranging each block (``Q``), and contracting back (``P^{-1}``):

    type A:  T = P^{-1} Q K_1 ... K_{n-1} P
    type D:  T = P^{-1} K_{(n-1)bar} ... K_{1bar} Q K_1 ... K_{n-1} P

with operators applied right to left.  Cells hold signed letters: ``a`` for
an ``a``-ball, ``-a`` for an ``abar``-ball, ``n`` for an empty cell and ``-n``
(type D only) for a bound state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .crystal import CarrierSpec, ElementA, ElementD
from .errors import (
    ConstraintViolationError,
    DimensionMismatchError,
    InternalInvariantViolation,
    InvalidSpeciesError,
    MarginTooSmallError,
    NegativeInputError,
    NotCanonicallyOrderedError,
    ShapeMismatchError,
    UnsupportedRankError,
)
from .rmap_a import r_a_raw
from .rmap_d import r_d_raw

__all__ = [
    "AutomatonState",
    "BasicArray",
    "EvolutionTrace",
    "gamma",
    "expand_P",
    "contract_P_inverse",
    "rearrange_Q",
    "k_motion",
    "evolve_r",
    "evolve_factorized",
    "factorized_trace",
    "local_step_def52",
    "LocalStepTrace",
]


@dataclass(frozen=True)
class AutomatonState:
    """A row of type-A or type-D elements sharing the same ``n``."""

    sites: tuple

    def __post_init__(self):
        sites = tuple(self.sites)
        if not sites:
            raise ValueError("a state needs at least one site")
        cls = type(sites[0])
        if cls not in (ElementA, ElementD):
            raise TypeError(f"sites must be ElementA or ElementD, got {cls.__name__}")
        for s in sites:
            if type(s) is not cls:
                raise TypeError("all sites must have the same kind")
            if s.n != sites[0].n:
                raise DimensionMismatchError("all sites must share the same n")
        object.__setattr__(self, "sites", sites)

    @property
    def kind(self):
        return self.sites[0].kind

    @property
    def n(self):
        return self.sites[0].n

    @property
    def capacities(self):
        return tuple(s.shape for s in self.sites)

    def __len__(self):
        return len(self.sites)

    def __iter__(self):
        return iter(self.sites)

    def weight(self):
        """Total ``x_i - xbar_i`` over all sites."""
        n = self.n
        tot = [0] * n
        for s in self.sites:
            w = s.coords if s.kind == "A" else s.weight()
            for i in range(n):
                tot[i] += w[i]
        return tuple(tot)


@dataclass(frozen=True)
class BasicArray:
    """Capacity-1 cells grouped into blocks; ``blocks[k]`` is the size of block k."""

    kind: str
    n: int
    cells: tuple
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if sum(self.blocks) != len(self.cells) or min(self.blocks, default=1) < 1:
            raise ValueError("block sizes must be positive and cover every cell")
        for c in self.cells:
            if c == 0 or abs(c) > self.n or (self.kind == "A" and c < 0):
                raise ValueError(f"invalid letter {c} for type {self.kind}, n={self.n}")

    @property
    def walls(self):
        """Cell offsets at which each block starts (including 0)."""
        out, pos = [], 0
        for b in self.blocks:
            out.append(pos)
            pos += b
        return tuple(out)

    def block_cells(self):
        pos = 0
        for b in self.blocks:
            yield self.cells[pos:pos + b]
            pos += b

    def count(self, letter):
        return self.cells.count(letter)

    def replace_cells(self, cells):
        return BasicArray(self.kind, self.n, cells, self.blocks)


@dataclass
class EvolutionTrace:
    """Snapshots of the basic array after each stage of the factorized step.

    Labels are ``"P"``, ``"t_i"`` after the ``i``-carrier, ``"Q"``, ``"tbar_i"``
    after the ``ibar``-carrier.  ``loads`` maps each species to the final load
    of its carrier.
    """

    snapshots: list = field(default_factory=list)
    loads: dict = field(default_factory=dict)
    result: AutomatonState = None

    def at(self, label):
        for lab, arr in self.snapshots:
            if lab == label:
                return arr
        raise KeyError(label)


def gamma(A, B, C, D, E):
    """The five-integer local map ``(A, B, C, D, E) -> (F, G, H, I, J)``.

    It satisfies ``F + G = A + B``, ``H + I = C + D`` and ``F + H + J = B + D + E``.
    """
    for name, v in zip("ABCDE", (A, B, C, D, E)):
        if v < 0:
            raise NegativeInputError(f"{name} = {v} is negative")
    ea = max(E - A, 0)
    F = min(A, E)
    G = B + max(A - E, 0)
    H = min(C, B + ea)
    I = D + max(C - B - ea, 0)
    J = D + max(B - C + ea, 0)
    return F, G, H, I, J


def _block_letters(site):
    n = site.n
    if site.kind == "A":
        out = []
        for a in range(n, 0, -1):
            out.extend([a] * site.coords[a - 1])
        return out
    out = []
    for a in range(1, n + 1):
        out.extend([-a] * site.lower[a - 1])
    for a in range(n, 0, -1):
        out.extend([a] * site.upper[a - 1])
    return out


def expand_P(state):
    """Expand every site into its canonically ordered block of capacity-1 cells.

    Type A: ``n^{y_n} ... 1^{y_1}``.  Type D: ``1bar^{ybar_1} ... nbar^{ybar_n}``
    followed by ``n^{y_n} ... 1^{y_1}``.
    """
    cells = []
    for site in state.sites:
        cells.extend(_block_letters(site))
    return BasicArray(state.kind, state.n, cells, state.capacities)


def _canonical_rank(c, n):
    return -c - 1 if c < 0 else 2 * n - c


def contract_P_inverse(arr):
    """Inverse of :func:`expand_P`; every block must already be canonically ordered."""
    n = arr.n
    sites = []
    for k, block in enumerate(arr.block_cells()):
        ranks = [_canonical_rank(c, n) for c in block]
        if any(r1 > r2 for r1, r2 in zip(ranks, ranks[1:])):
            raise NotCanonicallyOrderedError(
                f"block {k} is not canonically ordered: {list(block)}", block=k
            )
        upper = [0] * n
        lower = [0] * n
        for c in block:
            if c > 0:
                upper[c - 1] += 1
            else:
                lower[-c - 1] += 1
        if arr.kind == "A":
            sites.append(ElementA(tuple(upper)))
        else:
            if upper[-1] and lower[-1]:
                raise ConstraintViolationError(
                    f"block {k} holds both empty cells and bound states"
                )
            sites.append(ElementD(tuple(upper), tuple(lower)))
    return AutomatonState(tuple(sites))


def rearrange_Q(arr):
    """Within each block move empty cells to the left end and bound states to the right.

    The relative order of every other letter is kept.
    """
    n = arr.n
    cells = []
    for block in arr.block_cells():
        empty = [c for c in block if c == n]
        bound = [c for c in block if c == -n]
        rest = [c for c in block if c != n and c != -n]
        cells.extend(empty + rest + bound)
    return arr.replace_cells(cells)


def k_motion(a, arr, initial_load):
    """Sweep the ``a``-carrier once from left to right; returns ``(array, final_load)``.

    ``a`` is a species ``1..n-1`` or, in type D, ``-1..-(n-1)`` for the barred
    ones.  Walls are ignored: the carrier visits every cell.
    """
    n = arr.n
    if not isinstance(a, int) or a == 0 or abs(a) >= n or (arr.kind == "A" and a < 0):
        raise InvalidSpeciesError(f"species {a} is not a ball species for type {arr.kind}, n={n}")
    if initial_load < 0:
        raise NegativeInputError(f"initial load {initial_load} is negative")
    anti = -a
    bound = -n
    load = initial_load
    cells = list(arr.cells)
    for k, c in enumerate(cells):
        if c == a:
            cells[k] = n
            load += 1
        elif c == n:
            if load:
                cells[k] = a
                load -= 1
        elif c == anti:
            if load:
                cells[k] = bound
                load -= 1
        elif c == bound:
            cells[k] = anti
            load += 1
    return arr.replace_cells(cells), load


def _evolve_r_once(state, element):
    sites = []
    if state.kind == "A":
        c = element.coords
        for s in state.sites:
            xp, c = r_a_raw(c, s.coords)
            sites.append(ElementA(xp))
        return AutomatonState(tuple(sites)), ElementA(c)
    c, cb = element.upper, element.lower
    for s in state.sites:
        xp, xbp, c, cb = r_d_raw(c, cb, s.upper, s.lower)
        sites.append(ElementD(xp, xbp))
    return AutomatonState(tuple(sites)), ElementD(c, cb)


def _check_run(state, carrier):
    if not isinstance(carrier, CarrierSpec):
        carrier = CarrierSpec(carrier, 0)
    if carrier.kind != state.kind:
        raise DimensionMismatchError("carrier and state have different kinds")
    if carrier.n != state.n:
        raise DimensionMismatchError(f"carrier n={carrier.n} but state n={state.n}")
    if state.kind == "D" and state.n < 3:
        raise UnsupportedRankError("type-D dynamics needs n >= 3")
    return carrier


def evolve_r(state, carrier):
    """One time step by successive application of R; returns ``(new_state, exiting_carrier)``.

    The step is also run with the carrier's ``x_n`` raised by one; if the new
    state differs the carrier was not large enough and MarginTooSmallError is
    raised.
    """
    carrier = _check_run(state, carrier)
    new, out = _evolve_r_once(state, carrier.element)
    xn = carrier.element[carrier.n]
    witness, _ = _evolve_r_once(state, carrier.with_vacuum(xn + 1).element)
    if witness != new:
        raise MarginTooSmallError(
            f"result changed when x_n went from {xn} to {xn + 1}; use a larger carrier"
        )
    return new, out


def factorized_trace(state, carrier):
    """Run the factorized step and record every intermediate basic array."""
    carrier = _check_run(state, carrier)
    e = carrier.element
    n = state.n
    trace = EvolutionTrace()
    arr = expand_P(state)
    trace.snapshots.append(("P", arr))
    for a in range(n - 1, 0, -1):
        arr, trace.loads[a] = k_motion(a, arr, e[a])
        trace.snapshots.append((f"t_{a}", arr))
    arr = rearrange_Q(arr)
    trace.snapshots.append(("Q", arr))
    if state.kind == "D":
        for a in range(1, n):
            arr, trace.loads[-a] = k_motion(-a, arr, e.bar(a))
            trace.snapshots.append((f"tbar_{a}", arr))
    trace.result = contract_P_inverse(arr)
    return trace


def evolve_factorized(state, carrier):
    """One time step computed as ``P^{-1} [K_bar...] Q K_1 ... K_{n-1} P``."""
    return factorized_trace(state, carrier).result


@dataclass(frozen=True)
class LocalStepTrace:
    """Intermediate variables of the local recursion.

    ``z`` and ``zbar`` are indexed ``0..2n-2``; ``y_circ`` and ``ybar_circ``
    are indexed ``1..n-1`` (entry 0 is unused).
    """

    z: tuple
    zbar: tuple
    y_circ: tuple
    ybar_circ: tuple


def local_step_raw(x, xb, y, yb):
    """Local recursion on raw tuples; returns ``(x', xbar', y', ybar', trace)``."""
    n = len(x)
    z = [0] * (2 * n - 1)
    zb = [0] * (2 * n - 1)
    yc = [0] * n
    ybc = [0] * n
    xp = [0] * n
    xbp = [0] * n
    yp = [0] * n
    ybp = [0] * n
    zb[0] = yb[n - 1]
    z[0] = y[n - 1]
    for i in range(n - 1, 0, -1):
        k = n - 1 - i
        zb[k + 1], ybc[i], yc[i], z[k + 1], yp[i - 1] = gamma(
            yb[i - 1], zb[k], z[k], y[i - 1], x[i - 1]
        )
    for i in range(1, n):
        k = n - 2 + i
        xbp[i - 1], z[k + 1], zb[k + 1], xp[i - 1], ybp[i - 1] = gamma(
            z[k], ybc[i], yc[i], zb[k], xb[i - 1]
        )
    xp[n - 1] = z[2 * n - 2]
    xbp[n - 1] = zb[2 * n - 2]
    lx = sum(x) + sum(xb)
    yp[n - 1] = lx - sum(yp[: n - 1]) - sum(ybp[: n - 1])
    ybp[n - 1] = 0
    trace = LocalStepTrace(tuple(z), tuple(zb), tuple(yc), tuple(ybc))
    return tuple(xp), tuple(xbp), tuple(yp), tuple(ybp), trace


def local_step_def52(x, y):
    """One carrier/box interaction through the chain of ``gamma`` maps.

    ``x`` is a saturated carrier (``xbar_n == 0``, large ``x_n``) and ``y`` a
    box.  Returns ``(x', y', trace)`` with ``x'`` the new box (shape ``l(y)``)
    and ``y'`` the outgoing carrier.
    """
    if x.n != y.n:
        raise DimensionMismatchError(f"n differs: {x.n} vs {y.n}")
    if x.n < 3:
        raise UnsupportedRankError("type-D dynamics needs n >= 3")
    if x.lower[-1] != 0:
        raise ConstraintViolationError("the carrier needs xbar_n == 0")
    xp, xbp, yp, ybp, trace = local_step_raw(x.upper, x.lower, y.upper, y.lower)
    if yp[-1] < 0:
        raise ShapeMismatchError(
            f"y'_n = {yp[-1]} is negative; the carrier is too small"
        )
    if sum(xp) + sum(xbp) != y.shape or xp[-1] * xbp[-1] != 0:
        raise InternalInvariantViolation(f"local step produced invalid box {xp}|{xbp}")
    return ElementD(xp, xbp), ElementD(yp, ybp), trace
