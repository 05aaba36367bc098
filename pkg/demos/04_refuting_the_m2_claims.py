"""
The m = 2 claims, checked exhaustively
======================================

The earlier values were 2 for (P_n x P_2) o K1 and n for (K_n x P_2) o K1.
Exhaustion shows 3 and n - 1 instead (they coincide at n = 3 for the
complete family).
"""

from metricdim import metric_dimension_exact, path_graph, pendant_bound_check
from metricdim.families import grid_corona, refute_old_theorems

for n in range(3, 7):
    for rep in refute_old_theorems(n):
        d = rep.to_dict()
        print(f"{d['family']:>8} n={n}: old {d['old_claim']}, exact {d['true_dim']}, "
              f"{d['failing_subsets']} failing {d['exhausted_size']}-subsets -> {d['status']}")

# outside the corrected range there is no closed form here, only numbers
for n, m in [(1, 2), (2, 2), (2, 3), (4, 1)]:
    print(f"(P{n} x P{m}) o K1: dim = {metric_dimension_exact(grid_corona(n, m).graph).dim}")

# adding one pendant edge moves the dimension by at most one
print("pendant sandwich on P5:", all(pendant_bound_check(path_graph(5), v) for v in range(5)))
