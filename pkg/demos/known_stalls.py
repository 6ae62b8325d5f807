"""
Where the stretch-3 colorer stops
=================================

The deterministic procedure is not total.  Two small inputs show the two ways
it stops: a member of the anchor family that is Class 2 (no Delta-coloring
exists at all), and a Class 1 graph where the leftmost donor edge is simply
not an edge.  Both are reported as LemmaViolation, never patched silently.
"""

import numpy as np

from splitchroma import (
    GenParams,
    Graph,
    LemmaViolation,
    chromatic_index_bruteforce,
    color_sigma3_split,
    is_neighborhood_overfull,
    random_split_graph,
)

k6 = [(i, j) for i in range(6) for j in range(i + 1, 6)]
class2 = Graph.from_edges(8, k6 + [(0, 6), (1, 6), (2, 7), (3, 7), (4, 7), (5, 7)])
print("neighborhood-overfull:", is_neighborhood_overfull(class2),
      "| chi' =", chromatic_index_bruteforce(class2)[0], "| Delta =", class2.max_degree)

stall = Graph.from_edges(8, [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 6), (1, 2), (1, 3), (1, 4), (1, 7),
    (2, 3), (2, 4), (2, 5), (3, 5), (3, 6), (3, 7),
])
print("chi' =", chromatic_index_bruteforce(stall)[0], "| Delta =", stall.max_degree)

for name, g in (("class 2 member", class2), ("class 1 stall", stall)):
    try:
        color_sigma3_split(g)
    except LemmaViolation as exc:
        print(f"{name}: {exc}")

# how often does it happen on random members?
outcomes = []
for seed in range(300):
    g, p = random_split_graph(GenParams(clique_size=(3, 30), independent_size=(1, 30),
                                        seed=seed, family="theorem9"))
    try:
        color_sigma3_split(g, p)
        outcomes.append(1)
    except LemmaViolation:
        outcomes.append(0)
print(f"completed on {np.mean(outcomes):.1%} of 300 random members")
