"""
Antiparticles and bound states
==============================

In type D a box may hold a barred letter ``-a`` (an antiparticle) or ``B``,
a particle-antiparticle pair bound in one cell.  The carriers create and
annihilate pairs as they sweep, yet the evolution obtained through R matches
the one obtained from the loading and unloading rules exactly.
"""

from crystal_automata import AutomatonState, ElementD, evolve_factorized, evolve_r, make_carrier
from crystal_automata.dynamics import factorized_trace
from crystal_automata.render import render_state


def letter(a, n=3):
    up, lo = [0] * n, [0] * n
    if a > 0:
        up[a - 1] = 1
    else:
        lo[-a - 1] = 1
    return ElementD(tuple(up), tuple(lo))


row = [1, -1, 3, 3, 2, 3, -3, 3, 3, 3, 3, 3, 3, 3]
state = AutomatonState(tuple(letter(a) for a in row))

for _ in range(6):
    print(render_state(state))
    carrier = make_carrier("D", 3, state.capacities)
    nxt = evolve_r(state, carrier)[0]
    assert nxt == evolve_factorized(state, carrier)
    state = nxt

###############################################################################
# One step in detail: the basic array after each carrier, and the loads the
# carriers leave with.

state = AutomatonState(tuple(letter(a) for a in row))
trace = factorized_trace(state, make_carrier("D", 3, state.capacities))
for label, arr in trace.snapshots:
    print(f"{label:>7}  " + " ".join("B" if c == -3 else str(c) for c in arr.cells))
print("final loads:", trace.loads)
