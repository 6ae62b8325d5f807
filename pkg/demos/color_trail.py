"""
A color trail, one swap at a time
=================================

An outside vertex w inherits colors from the saturated core, so several of its
edges can clash.  The trail orders those edges and each clash is removed by
exchanging colors with a donor edge x_i x'_j.  This instance needs 1, 2, 2 and
3 swaps at its four conflicting slots.
"""

from splitchroma import EdgeColoring, ExtensionState, Graph, build_color_trail, resolve_conflicts, verify_proper

cols = {
    (0, 1): 1, (0, 2): 1, (0, 3): 1, (0, 4): 2, (0, 5): 2,
    (2, 6): 2, (3, 7): 2, (3, 6): 3, (4, 7): 3, (4, 6): 4,
    (5, 9): 3, (5, 7): 4, (5, 6): 5, (1, 8): 2, (1, 10): 3,
}
g = Graph.from_edges(11, list(cols))
state = ExtensionState.from_coloring(
    g, EdgeColoring(cols, palette_size=5), pairing={(0, i): i + 5 for i in range(1, 6)}
)

trail = build_color_trail(state, 0)
print("trail:", [(s.x, s.partner, state.coloring[0, s.x]) for s in trail.slots])
print("color groups (color, multiplicity):", trail.color_groups)

counts = resolve_conflicts(state, 0, trail)
for e in state.swap_log:
    print(f"  step {e.step}: slot {e.slot} borrows from slot {e.donor_slot}, "
          f"{e.edges[0]} {e.colors[0]}->{e.colors[1]}, {e.edges[1]} {e.colors[1]}->{e.colors[0]}")
print("swaps per slot:", counts)
print("proper:", verify_proper(g, state.coloring) == [])
