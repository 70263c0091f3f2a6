"""Text and JSON renderings of space-time diagrams."""

from __future__ import annotations

import json

from .dynamics import expand_P

__all__ = ["letter_text", "render_state", "render_timeline", "timeline_json"]


def letter_text(letter, n):
    """``a`` -> ``"a"``, barred ``a`` -> ``"-a"``, bound state -> ``"B"``."""
    if letter == -n:
        return "B"
    return str(letter)


def render_state(state):
    """One line of letters; walls ``|`` appear only when some site holds several cells."""
    arr = expand_P(state)
    blocks = [" ".join(letter_text(c, state.n) for c in b) for b in arr.block_cells()]
    sep = " | " if max(state.capacities) > 1 else " "
    return sep.join(blocks)


def render_timeline(states):
    return "\n".join(render_state(s) for s in states) + "\n"


def _site_dict(site):
    if site.kind == "A":
        return {"capacity": site.shape, "x": list(site.coords)}
    return {"capacity": site.shape, "x": list(site.upper), "xbar": list(site.lower)}


def timeline_json(states, extra=None):
    """JSON text with the coordinates of every site at every step plus the raw cells."""
    first = states[0]
    doc = {
        "kind": first.kind,
        "n": first.n,
        "capacities": list(first.capacities),
        "steps": [
            {
                "t": t,
                "sites": [_site_dict(s) for s in st.sites],
                "cells": list(expand_P(st).cells),
            }
            for t, st in enumerate(states)
        ],
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2) + "\n"
