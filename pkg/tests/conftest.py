"""Shared oracles.  These deliberately avoid the library's bitset helpers."""

from itertools import combinations

import pytest

from extremal_graphs import Graph


def naive_graphs(n):
    """Every labelled graph on n vertices, as (edge set, Graph), by subset of pairs."""
    pairs = list(combinations(range(n), 2))
    for r in range(len(pairs) + 1):
        for chosen in combinations(pairs, r):
            yield set(chosen), Graph.from_edges(n, chosen)


def naive_connected(n, edges):
    nbrs = {v: set() for v in range(n)}
    for a, b in edges:
        nbrs[a].add(b)
        nbrs[b].add(a)
    stack, seen = [0], {0}
    while stack:
        for u in nbrs[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def naive_free(n, edges):
    """All-pairs neighbourhood check straight from the definition."""
    e = {frozenset(p) for p in edges}
    free = set()
    for i in range(n):
        nb = [j for j in range(n) if frozenset((i, j)) in e]
        if all(frozenset((j, k)) in e for j, k in combinations(nb, 2)):
            free.add(i)
    return free


def has_induced_cycle(g):
    """Brute force: some vertex subset of size >= 4 induces a cycle."""
    for size in range(4, g.n + 1):
        for subset in combinations(range(g.n), size):
            s = set(subset)
            degs = [sum(1 for u in s if g.has_edge(v, u)) for v in subset]
            if any(d != 2 for d in degs):
                continue
            # 2-regular: a single cycle iff connected
            start = subset[0]
            seen, stack = {start}, [start]
            while stack:
                v = stack.pop()
                for u in s:
                    if g.has_edge(v, u) and u not in seen:
                        seen.add(u)
                        stack.append(u)
            if seen == s:
                return True
    return False


def connected_noncomplete(n):
    for edges, g in naive_graphs(n):
        if naive_connected(n, edges) and len(edges) < n * (n - 1) // 2:
            yield g


@pytest.fixture(scope="session")
def small_extremal_candidates():
    return [g for n in range(3, 6) for g in connected_noncomplete(n)]


# acceptance lines, printed again at the end of the run so they survive output capture
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
