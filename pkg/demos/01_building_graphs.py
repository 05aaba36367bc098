"""
Building the corona-of-product graphs
=====================================

Grids, complete-by-path products and their K1 coronas, with the labels
that survive each construction.
"""

from metricdim import (
    Pair,
    Pendant,
    all_pairs_distances,
    cartesian_product,
    complete_graph,
    corona_k1,
    degree,
    path_graph,
)

# a 3 x 2 grid: vertex v(i,j) sits at id (i-1)*m + (j-1)
grid = cartesian_product(path_graph(3), path_graph(2))
print(grid, [str(lab) for lab in grid.labels])

# hang one pendant u(i,j) on every v(i,j)
g = corona_k1(grid)
print(g, "pendants:", [str(lab) for lab in g.labels[grid.order:]])

# hop distances come from one all-pairs BFS
dm = all_pairs_distances(g)
a, b = g.vertex(Pendant(Pair(1, 1))), g.vertex(Pendant(Pair(3, 2)))
print("d(u(1,1), u(3,2)) =", dm[a, b])  # 1 + |3-1| + |2-1| + 1

# K3 x P2 is the triangular prism; its corona adds 6 pendants
prism = corona_k1(cartesian_product(complete_graph(3), path_graph(2)))
print(prism, "degree of v(1,1):", degree(prism, prism.vertex(Pair(1, 1))))
