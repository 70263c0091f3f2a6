"""Plain-text state files and inline coordinate strings.

A state file has a header line ``kind n N`` followed by one line per site::

    # two sites of a type-D automaton
    D 3 2
    1 : 1 0 0 | 0 0 0
    2 : 0 0 0 | 0 1 1

The leading number of a site line is its capacity and must equal the sum of
the coordinates.  ``#`` starts a comment; blank lines are ignored.
:func:`serialize_state` writes the canonical form (no comments, single
spaces, trailing newline), which :func:`parse_state` reads back to the same
bytes.
"""

from __future__ import annotations

import re

from .crystal import ElementA, ElementD
from .dynamics import AutomatonState
from .errors import CrystalError, ParseError

__all__ = ["parse_state", "serialize_state", "read_state", "write_state", "parse_element"]

_TOKEN = re.compile(r"\S+")


def _tokens(line):
    """``(column, text)`` pairs with 1-based columns, comment stripped."""
    body = line.split("#", 1)[0]
    return [(m.start() + 1, m.group()) for m in _TOKEN.finditer(body)]


def _int(tok, lineno, what):
    col, text = tok
    if not re.fullmatch(r"[+-]?\d+", text):
        raise ParseError(f"expected an integer for {what}, got {text!r}", lineno, col)
    return int(text)


def _parse_header(toks, lineno):
    if len(toks) != 3:
        col = toks[min(len(toks), 3) - 1][0] if toks else 1
        raise ParseError("header must be 'kind n N'", lineno, col)
    kind_col, kind = toks[0]
    if kind not in ("A", "D"):
        raise ParseError(f"kind must be A or D, got {kind!r}", lineno, kind_col)
    n = _int(toks[1], lineno, "n")
    count = _int(toks[2], lineno, "N")
    if n < 2 or (kind == "D" and n < 3):
        raise ParseError(f"n={n} is too small for type {kind}", lineno, toks[1][0])
    if count < 1:
        raise ParseError("N must be at least 1", lineno, toks[2][0])
    return kind, n, count


def _parse_site(toks, lineno, kind, n):
    if len(toks) < 2 or toks[1][1] != ":":
        col = toks[1][0] if len(toks) > 1 else toks[0][0] + len(toks[0][1])
        raise ParseError("site line must start with 'l :'", lineno, col)
    cap = _int(toks[0], lineno, "capacity")
    rest = toks[2:]
    if kind == "A":
        groups = [rest]
    else:
        bars = [k for k, (_, t) in enumerate(rest) if t == "|"]
        if len(bars) != 1:
            col = rest[bars[1]][0] if len(bars) > 1 else (rest[-1][0] if rest else toks[1][0])
            raise ParseError("type-D site needs exactly one '|'", lineno, col)
        groups = [rest[: bars[0]], rest[bars[0] + 1:]]
    vectors = []
    for g in groups:
        if len(g) != n:
            col = g[n][0] if len(g) > n else (g[-1][0] if g else toks[1][0])
            raise ParseError(f"expected {n} coordinates, got {len(g)}", lineno, col)
        vec = tuple(_int(t, lineno, "coordinate") for t in g)
        for (col, _), v in zip(g, vec):
            if v < 0:
                raise ParseError(f"coordinate {v} is negative", lineno, col)
        vectors.append(vec)
    first_col = rest[0][0] if rest else toks[0][0]
    try:
        site = ElementA(vectors[0]) if kind == "A" else ElementD(vectors[0], vectors[1])
    except CrystalError as exc:
        raise ParseError(str(exc), lineno, first_col) from exc
    if site.shape != cap:
        raise ParseError(
            f"capacity {cap} does not match coordinate sum {site.shape}", lineno, toks[0][0]
        )
    return site


def parse_state(text):
    """Parse a state file; raises ParseError with the offending line and column."""
    header = None
    sites = []
    last = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        last = lineno
        if header is None:
            header = _parse_header(toks, lineno)
            continue
        kind, n, count = header
        if len(sites) == count:
            raise ParseError(f"more than N={count} site lines", lineno, toks[0][0])
        sites.append(_parse_site(toks, lineno, kind, n))
    if header is None:
        raise ParseError("missing header line 'kind n N'", 1, 1)
    if len(sites) != header[2]:
        raise ParseError(f"expected {header[2]} site lines, found {len(sites)}", last + 1, 1)
    return AutomatonState(tuple(sites))


def _site_line(site):
    if site.kind == "A":
        return f"{site.shape} : " + " ".join(map(str, site.coords))
    up = " ".join(map(str, site.upper))
    lo = " ".join(map(str, site.lower))
    return f"{site.shape} : {up} | {lo}"


def serialize_state(state):
    lines = [f"{state.kind} {state.n} {len(state)}"]
    lines.extend(_site_line(s) for s in state.sites)
    return "\n".join(lines) + "\n"


def read_state(path):
    with open(path, encoding="utf-8") as fh:
        return parse_state(fh.read())


def write_state(state, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_state(state))


def parse_element(text, kind, n=None):
    """Parse an inline element such as ``"2,0"`` or ``"1 0 0 | 0 0 1"``.

    Coordinates are separated by commas or spaces; type D takes a ``|``
    between the upper and lower halves.
    """
    parts = text.split("|")
    if kind == "A" and len(parts) != 1:
        raise ParseError("type-A coordinates take no '|'", 1, text.index("|") + 1)
    if kind == "D" and len(parts) != 2:
        raise ParseError("type-D coordinates need one '|' between halves", 1, 1)
    vectors = []
    offset = 0
    for part in parts:
        vec = []
        for m in re.finditer(r"[^,\s]+", part):
            tok = (offset + m.start() + 1, m.group())
            vec.append(_int(tok, 1, "coordinate"))
        offset += len(part) + 1
        vectors.append(tuple(vec))
    if kind == "D" and len(vectors[0]) != len(vectors[1]):
        raise ParseError("upper and lower halves differ in length", 1, 1)
    if n is not None and len(vectors[0]) != n:
        raise ParseError(f"expected {n} coordinates, got {len(vectors[0])}", 1, 1)
    try:
        return ElementA(vectors[0]) if kind == "A" else ElementD(vectors[0], vectors[1])
    except CrystalError as exc:
        raise ParseError(str(exc), 1, 1) from exc
