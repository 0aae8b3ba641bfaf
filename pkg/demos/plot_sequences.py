"""
Which invariant tuples occur
============================

On the extremal hyperplane ``f + d = n + 2 - q`` only some tuples are
realized: kappa 1 with any diameter at least 2, or higher kappa with
diameter exactly 2.  Each realizable tuple has an explicit witness.
"""

from extremal_graphs import invariant_report, realizable_sequence, witness_for_sequence

n = 7
for q in range(1, n):
    for d in range(1, n + 2 - q):
        f = n + 2 - q - d
        if realizable_sequence(n, q, f, d):
            r = invariant_report(witness_for_sequence(n, q, f, d))
            print(f"(n={n}, kappa={q}, f={f}, diam={d})  witness gives {(r.kappa, r.free_count, r.diameter)}")
