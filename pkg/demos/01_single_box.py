"""Best single rectangle over a handful of weighted points."""

import numpy as np

from boxcover import region_weight, solve_single_box, validate_instance
from boxcover.oracle import brute_force_single_box

# a positive cluster in the lower left, one heavy negative point in its middle
pts = [(1.0, 1.0, 3), (2.0, 1.5, 2), (1.5, 2.5, 4), (1.8, 1.9, -6),
       (6.0, 6.0, 5), (7.0, 0.5, -2)]
inst = validate_instance(pts)
print("n =", inst.n, " total positive weight =", inst.weights[inst.weights > 0].sum())

sol = solve_single_box(inst)
print("best box objective:", sol.objective)
box = sol.boxes[0]
print(f"box x in ({box.x_lo:g}, {box.x_hi:g}), y in ({box.y_lo:g}, {box.y_hi:g})")

# which points ended up inside
inside = [p for p in inst.points if box.contains(p.x, p.y)]
print("covered:", [(p.x, p.y, p.w) for p in inside])

# cross-check against exhaustive search and against the box itself
assert sol.objective == brute_force_single_box(inst)
assert region_weight(inst, sol.boxes, sol.mode) == sol.objective

# all-negative input: the empty box wins
neg = validate_instance([(x, -x, -1.0) for x in np.arange(5.0)])
print("all negative ->", solve_single_box(neg).objective)
