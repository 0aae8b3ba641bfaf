"""Compiled per-graph kernels over int64 bitrow adjacency (at most 63 vertices).

Every public invariant in :mod:`extremal_graphs.invariants` is computed here,
and :func:`scan_masks` runs the same kernels over a block of edge masks so the
exhaustive verification does not pay Python overhead per graph.
"""

import numpy as np
from numba import njit

MAX_KERNEL_N = 63


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def full_mask(n):
    return (1 << n) - 1


@njit(cache=True)
def reach(adj, n, start, allowed):
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in range(n):
            if frontier >> v & 1:
                nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


@njit(cache=True)
def is_connected(adj, n):
    if n == 0:
        return True
    full = full_mask(n)
    return reach(adj, n, 0, full) == full


@njit(cache=True)
def is_complete(adj, n):
    full = full_mask(n)
    for v in range(n):
        if adj[v] | (1 << v) != full:
            return False
    return True


@njit(cache=True)
def diameter(adj, n):
    """Largest eccentricity, or -1 when disconnected."""
    full = full_mask(n)
    best = 0
    for s in range(n):
        seen = 1 << s
        frontier = seen
        ecc = 0
        while True:
            nxt = 0
            for v in range(n):
                if frontier >> v & 1:
                    nxt |= adj[v]
            frontier = nxt & ~seen
            if frontier == 0:
                break
            seen |= frontier
            ecc += 1
        if seen != full:
            return -1
        if ecc > best:
            best = ecc
    return best


@njit(cache=True)
def free_mask(adj, n):
    mask = 0
    for v in range(n):
        nb = adj[v]
        ok = True
        for u in range(n):
            if nb >> u & 1 and nb & ~adj[u] != 1 << u:
                ok = False
                break
        if ok:
            mask |= 1 << v
    return mask


@njit(cache=True)
def local_connectivity(adj, n, s, t, cutoff):
    """Internally vertex-disjoint s-t paths by unit max-flow on the split digraph.

    Node ``2v`` is ``v_in`` and ``2v + 1`` is ``v_out``; flow leaves ``s_out``
    and enters ``t_in``.
    """
    m = 2 * n
    res = np.zeros((m, m), dtype=np.uint8)
    for v in range(n):
        if v != s and v != t:
            res[2 * v, 2 * v + 1] = 1
        for u in range(n):
            if adj[v] >> u & 1:
                res[2 * v + 1, 2 * u] = 1
    source = 2 * s + 1
    sink = 2 * t
    parent = np.empty(m, dtype=np.int64)
    queue = np.empty(m, dtype=np.int64)
    flow = 0
    while flow < cutoff:
        for x in range(m):
            parent[x] = -1
        parent[source] = source
        head = 0
        tail = 1
        queue[0] = source
        while head < tail and parent[sink] < 0:
            x = queue[head]
            head += 1
            for y in range(m):
                if res[x, y] and parent[y] < 0:
                    parent[y] = x
                    queue[tail] = y
                    tail += 1
        if parent[sink] < 0:
            break
        y = sink
        while y != source:
            x = parent[y]
            res[x, y] = 0
            res[y, x] = 1
            y = x
        flow += 1
    return flow


@njit(cache=True)
def kappa(adj, n):
    full = full_mask(n)
    best = n - 1
    for v in range(n):
        d = popcount(adj[v])
        if d < best:
            best = d
    if best == n - 1:
        return n - 1
    if reach(adj, n, 0, full) != full:
        return 0
    # some vertex among the first kappa + 1 avoids a minimum separator
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if not adj[i] >> j & 1:
                k = local_connectivity(adj, n, i, j, best)
                if k < best:
                    best = k
        i += 1
    return best


@njit(cache=True)
def mcs_order(adj, n):
    weight = np.zeros(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    visited = 0
    for k in range(n):
        best_v = -1
        best_w = -1
        for v in range(n):
            if not visited >> v & 1 and weight[v] > best_w:
                best_v = v
                best_w = weight[v]
        order[k] = best_v
        visited |= 1 << best_v
        for u in range(n):
            if adj[best_v] >> u & 1 and not visited >> u & 1:
                weight[u] += 1
    return order


@njit(cache=True)
def peo_violation(adj, n, order):
    """First (v, a, b) with a, b non-adjacent neighbours of v visited before v, else (-1, -1, -1)."""
    before = 0
    for k in range(n):
        v = order[k]
        earlier = adj[v] & before
        for a in range(n):
            if earlier >> a & 1:
                missing = earlier & ~adj[a] & ~(1 << a)
                if missing:
                    b = 0
                    while not missing >> b & 1:
                        b += 1
                    return v, a, b
        before |= 1 << v
    return -1, -1, -1


@njit(cache=True)
def is_chordal(adj, n):
    v, _, _ = peo_violation(adj, n, mcs_order(adj, n))
    return v < 0


@njit(cache=True)
def mask_to_adj(mask, n, pair_i, pair_j, adj):
    for v in range(n):
        adj[v] = 0
    k = 0
    while mask:
        if mask & 1:
            i = pair_i[k]
            j = pair_j[k]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        mask >>= 1
        k += 1


@njit(cache=True)
def scan_masks(n, lo, hi, pair_i, pair_j):
    """Invariants of every connected graph whose edge mask lies in ``[lo, hi)``.

    Returns parallel arrays (mask, adjacency rows, complete, diameter, kappa,
    free mask, chordal) covering the connected graphs only, in ascending mask
    order.
    """
    size = hi - lo
    masks = np.empty(size, dtype=np.int64)
    rows = np.empty((size, n), dtype=np.int64)
    complete = np.empty(size, dtype=np.bool_)
    diam = np.empty(size, dtype=np.int64)
    kap = np.empty(size, dtype=np.int64)
    free = np.empty(size, dtype=np.int64)
    chordal = np.empty(size, dtype=np.bool_)
    adj = np.zeros(n, dtype=np.int64)
    c = 0
    for mask in range(lo, hi):
        mask_to_adj(mask, n, pair_i, pair_j, adj)
        if not is_connected(adj, n):
            continue
        masks[c] = mask
        rows[c, :] = adj
        complete[c] = is_complete(adj, n)
        diam[c] = diameter(adj, n)
        kap[c] = kappa(adj, n)
        free[c] = free_mask(adj, n)
        chordal[c] = is_chordal(adj, n)
        c += 1
    return masks[:c], rows[:c], complete[:c], diam[:c], kap[:c], free[:c], chordal[:c]


@njit(cache=True)
def connected_masks(n, lo, hi, pair_i, pair_j):
    out = np.empty(hi - lo, dtype=np.int64)
    adj = np.zeros(n, dtype=np.int64)
    c = 0
    for mask in range(lo, hi):
        mask_to_adj(mask, n, pair_i, pair_j, adj)
        if is_connected(adj, n):
            out[c] = mask
            c += 1
    return out[:c]


def as_array(adj):
    return np.array(adj, dtype=np.int64)


def pair_arrays(n):
    """Edge-mask bit ``k`` <-> ``k``-th pair in graph6 column order."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return (np.array([p[0] for p in pairs], dtype=np.int64),
            np.array([p[1] for p in pairs], dtype=np.int64))
