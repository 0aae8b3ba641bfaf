"""Parameter grids for the family builders: d <= 6, q <= 5, clique sizes <= 3, n <= 12."""

from functools import lru_cache

from extremal_graphs import FqSpec, GdSpec

MAX_N = 12
MAX_SIZE = 3


@lru_cache(maxsize=None)
def multisets(budget, largest=MAX_SIZE):
    """Non-increasing tuples of clique sizes <= largest with total <= budget."""
    out = [()]
    for s in range(1, min(largest, budget) + 1):
        out += [(s,) + rest for rest in multisets(budget - s, s)]
    return tuple(out)


def _families(slots, budget):
    if slots == 0:
        yield ()
        return
    for first in multisets(budget):
        for rest in _families(slots - 1, budget - sum(first)):
            yield (first,) + rest


def gd_grid(max_d=6, max_n=MAX_N):
    for d in range(2, max_d + 1):
        base = d + 1
        for hv in range(MAX_SIZE + 1):
            for hw in range(MAX_SIZE + 1):
                budget = max_n - base - hv - hw
                if budget < 0:
                    continue
                for fams in _families(2 * d - 3, budget):
                    yield GdSpec(d, hv, hw, fams[: d - 1], fams[d - 1:])


def fq_grid(max_q=5, max_n=MAX_N):
    for q in range(2, max_q + 1):
        for parts in multisets(max_n - q):
            if len(parts) >= 2:
                yield FqSpec(q, parts)
