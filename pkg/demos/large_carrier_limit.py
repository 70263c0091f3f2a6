"""
One box, one large carrier
==========================

When the carrier is much larger than the box, the type-D map simplifies: its
output is given by a chain of five-integer local maps, and the intermediate
integers of that chain are the counts of empty cells, bound states and balls
seen by the carriers.
"""

from crystal_automata import (
    AutomatonState,
    ElementD,
    apply_r_d,
    factorized_trace,
    limit_profile,
    local_step_def52,
    saturate,
    saturation_point,
)

x = ElementD((0, 0, 1), (0, 1, 0))  # carrier head; x_3 is raised below
y = ElementD((0, 1, 0), (0, 0, 2))  # the box, holding two bound states

###############################################################################
# Normalized V-functions settle once x_3 is large enough.

from crystal_automata.rmap_d import vw_values

for xn in range(6):
    xs = saturate(x, xn)
    print(xn, [v - xs.shape for v in vw_values(xs, y).V])
print("limit:", limit_profile(x, y).v)

###############################################################################
# At saturation the local chain, the limit formula and R coincide.

xs = saturate(x, saturation_point(x, y))
xp, yp, trace = local_step_def52(xs, y)
print("local chain:", xp, yp)
print("R          :", *apply_r_d(xs, y))
print("empty-cell counts z:", trace.z)

tr = factorized_trace(AutomatonState((y,)), xs)
print("empty cells after each unbarred carrier:", [tr.at(f"t_{i}").count(3) for i in (2, 1)])
