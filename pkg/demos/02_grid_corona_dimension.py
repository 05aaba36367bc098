"""
Dimension of (P_n x P_m) o K1
=============================

Three landmarks v(1,1), v(1,m), v(n,m) already resolve the grid corona,
their distance vectors follow a closed form, and no pair of landmarks works.
"""

import numpy as np

from metricdim import all_pairs_distances, grid_corona, metric_dimension_exact, metric_representation
from metricdim.families import GRID, theorem3_formula, theorem3_set, verify_theorem

n, m = 4, 3
inst = grid_corona(n, m)
dm = all_pairs_distances(inst.graph)
s = [inst.graph.vertex(lab) for lab in theorem3_set(n, m)]

# BFS representations of v(i,j) laid out on the grid, one array per landmark
reps = np.array([[metric_representation(dm, inst.v(i, j), s) for j in range(1, m + 1)] for i in range(1, n + 1)])
for t, lab in enumerate(theorem3_set(n, m)):
    print(f"distance to {lab}:\n{reps[:, :, t]}")

# ... and they agree with the closed form everywhere, pendants included
assert all(
    metric_representation(dm, inst.u(i, j) if p else inst.v(i, j), s) == theorem3_formula(n, m, i, j, p)
    for i in range(1, n + 1)
    for j in range(1, m + 1)
    for p in (False, True)
)

# exhaustive solve: every 2-subset fails, a 3-subset works
cert = metric_dimension_exact(inst.graph)
print(cert.to_text([str(lab) for lab in inst.graph.labels]))

# the whole box of the theorem at once
for n in range(3, 6):
    print(n, [verify_theorem(GRID, n, m).passed for m in range(2, 6)])
