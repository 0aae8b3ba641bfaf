"""
Free vertices, diameter and connectivity
=========================================

Compute the three invariants on a few small graphs and see how far each one
sits from the bound ``free_count + diameter <= n + 2 - kappa``.
"""

from extremal_graphs import cycle_graph, decode_graph6, invariant_report, path_graph

# a path is as extremal as it gets: two free ends, diameter n - 1, kappa 1
print(invariant_report(path_graph(6)).to_text())

# cycles have no free vertex at all, so the gap grows with n
for n in range(4, 8):
    r = invariant_report(cycle_graph(n))
    print(f"C{n}: diameter={r.diameter} kappa={r.kappa} gap={r.gap}")

# graph6 input works the same way; the free set is printed with 1-based labels
r = invariant_report(decode_graph6("C}"))
print(r.to_json())
