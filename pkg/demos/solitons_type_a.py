"""
Solitons in a multi-species box-ball system
===========================================

A row of capacity-1 boxes holds balls of species 1 and 2; letter 3 is an
empty box.  One time step threads a large carrier through the row with the
combinatorial R.  Longer strings of balls travel faster and survive
collisions with their lengths intact.
"""

from crystal_automata import AutomatonState, ElementA, evolve_factorized, evolve_r, make_carrier
from crystal_automata.render import render_state

n = 3
letters = [1, 1, 2, 3, 3, 1, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3]
state = AutomatonState(tuple(ElementA(tuple(int(a == k) for k in range(1, n + 1))) for a in letters))

###############################################################################
# Evolve with the carrier and, independently, with the particle-motion
# operators.  The two timelines agree line by line.

r_lines, k_lines = [], []
s_r = s_k = state
for t in range(8):
    r_lines.append(render_state(s_r))
    k_lines.append(render_state(s_k))
    carrier = make_carrier("A", n, state.capacities)
    s_r = evolve_r(s_r, carrier)[0]
    s_k = evolve_factorized(s_k, carrier)

for line in r_lines:
    print(line.replace("3", "."))
print("same as factorized:", r_lines == k_lines)

###############################################################################
# Boxes of larger capacity: walls separate the sites.

wide = AutomatonState((ElementA((1, 1, 0)), ElementA((0, 0, 2)), ElementA((2, 0, 1)), ElementA((0, 0, 3))))
for _ in range(3):
    print(render_state(wide))
    wide = evolve_r(wide, make_carrier("A", n, wide.capacities))[0]
