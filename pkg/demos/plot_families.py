"""
Building the two extremal families
==================================

Every connected non-complete graph attaining the bound is either a
path-like chordal graph with cliques hung on the path, or a clique joined to
a disjoint union of cliques.  Here both are built from their one-line specs.
"""

from extremal_graphs import build_fq, build_gd, classify, format_edgelist, invariant_report, parse_fq_spec, parse_gd_spec

# %%
# Path-like member: a path of length 7, two cliques at each end, cliques on
# single interior vertices and on consecutive pairs.
spec = parse_gd_spec("d=7; hv=2; hw=1; H1=1,1; H23=2,1; H5=3")
g = build_gd(spec)
r = invariant_report(g)
print(spec.to_text(), "-> n =", g.n, "gap =", r.gap)
print(classify(g).to_text())

# %%
# Join member: K_3 joined with K_1 + K_1 + K_2.
g = build_fq(parse_fq_spec("q=3; parts=1,1,2"))
print(format_edgelist(g))
print(classify(g).to_text())
