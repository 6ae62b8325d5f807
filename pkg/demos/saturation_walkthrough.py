"""
Inside the saturated core
=========================

The stretch-3 colorer starts from the closed neighbourhood H of a Delta-vertex,
adds edges until H* has exactly Delta*(n-1)/2 edges, and colors H* with Delta
colors.  Here we look at each stage.
"""

from splitchroma import (
    Graph,
    build_saturated,
    induce_H,
    missing_color_violations,
    missing_colors,
    plantholt_color,
    recognize_split,
    select_anchor,
)

g = Graph.from_edges(8, [(i, j) for i in range(5) for j in range(i + 1, 5)]
                     + [(0, 5), (1, 5), (1, 6), (2, 6), (3, 7), (4, 7)])
p = recognize_split(g)
anchor = select_anchor(g, p)
H = induce_H(g, anchor)
print("anchor", anchor, "-> H has", H.n, "vertices and", H.m, "edges")

rec = build_saturated(H, anchor.s1)
print("added edges:", rec.added_edges)
print("|E(H*)| =", rec.H_star.m, "= Delta * floor(n/2) =", rec.delta * (rec.H_star.n // 2))

c = plantholt_color(rec)
miss = missing_colors(rec.H_star, c)
for v in rec.H_star.vertices:
    print(f"  vertex {v}: degree {rec.H_star.degree(v)}, missing {sorted(miss[v])}")

# the Delta-1 vertices each miss one color, all different, none missing at s1
print("missing-color problems:", missing_color_violations(rec) or "none")
