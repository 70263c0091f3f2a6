"""Exhaustive enumerations of small elements, pairs and states."""

from __future__ import annotations

import itertools

from .crystal import ElementA, ElementD, make_carrier
from .dynamics import AutomatonState


def compositions(total, parts):
    """Non-negative integer vectors of length ``parts`` summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def elements_a(n, l):
    return [ElementA(c) for c in compositions(l, n)]


def elements_d(n, l):
    out = []
    for c in compositions(l, 2 * n):
        up, lo = c[:n], c[n:]
        if up[-1] * lo[-1] == 0:
            out.append(ElementD(up, lo))
    return out


def elements(kind, n, l):
    return elements_a(n, l) if kind == "A" else elements_d(n, l)


def bounded_a_raw(n, max_coord):
    """Raw type-A tuples with every coordinate <= max_coord (zero vector excluded)."""
    return [c for c in itertools.product(range(max_coord + 1), repeat=n) if any(c)]


def bounded_d_raw(n, max_coord):
    """Raw ``(upper, lower)`` pairs with every coordinate <= max_coord."""
    out = []
    rng = range(max_coord + 1)
    for up in itertools.product(rng, repeat=n):
        for lo in itertools.product(rng, repeat=n):
            if up[-1] * lo[-1] == 0 and (any(up) or any(lo)):
                out.append((up, lo))
    return out


def carrier_heads_raw(n, max_coord):
    """``(upper, lower)`` with ``x_n = xbar_n = 0`` and other coordinates <= max_coord.

    ``x_n`` is a placeholder, to be saturated by the caller.
    """
    rng = range(max_coord + 1)
    return [
        (up + (0,), lo + (0,))
        for up in itertools.product(rng, repeat=n - 1)
        for lo in itertools.product(rng, repeat=n - 1)
    ]


def capacity_lists(max_total, max_sites):
    for N in range(1, max_sites + 1):
        for caps in itertools.product(range(1, max_total + 1), repeat=N):
            if sum(caps) <= max_total:
                yield caps


def states(kind, n, capacities):
    pools = [elements(kind, n, l) for l in capacities]
    for sites in itertools.product(*pools):
        yield AutomatonState(sites)


def random_carriers(rng, kind, n, capacities, count, max_coord=2):
    """``count`` carriers with random non-vacuum loads in ``0..max_coord``.

    Draws ``n-1`` integers (then ``n-1`` more for type D) per carrier from
    ``rng.randint``, so a seeded :class:`random.Random` reproduces them.
    """
    out = []
    for _ in range(count):
        co = [rng.randint(0, max_coord) for _ in range(n - 1)]
        lo = [rng.randint(0, max_coord) for _ in range(n - 1)] if kind == "D" else None
        out.append(make_carrier(kind, n, capacities, co, lo))
    return out
