"""
Exhaustive check on all small graphs
====================================

Enumerate every connected labelled graph up to seven vertices and compare
the equation with the structural classification.  Seven vertices means
2^21 edge masks; the compiled kernels get through them in well under a
minute, and ``jobs`` spreads the work units over processes.
"""

import time

from extremal_graphs import verify_classification, verify_sequences


def main():
    for n in range(3, 8):
        t0 = time.perf_counter()
        s = verify_classification(n, jobs=2)
        seq = verify_sequences(n, summary=s)
        print(f"n={n}: {s.connected} connected, {s.extremal} extremal "
              f"({s.gd_members} path-like, {s.fq_members} join), ok={s.ok}, "
              f"tuples agree={seq.agree}  [{time.perf_counter() - t0:.1f}s]")


# worker processes re-import this file, so keep the run behind the guard
if __name__ == "__main__":
    main()
