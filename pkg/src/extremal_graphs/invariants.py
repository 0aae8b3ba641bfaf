"""Diameter, vertex connectivity, free (simplicial) vertices and chordality.

All routines work on the bitrow adjacency of :class:`~extremal_graphs.graph.Graph`
and use exact integer arithmetic.  ``kappa_bruteforce`` is a deliberately naive
separator search kept as a test oracle for the max-flow ``kappa``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from . import _kernels as _k
from .graph import Graph, GraphError, bits, induced_subgraph, is_clique

INF = math.inf


class UndefinedInvariantError(GraphError):
    """Raised when an invariant is requested for a graph on fewer than two vertices."""


def _require_two_vertices(g: Graph, what: str) -> None:
    if g.n <= 1:
        raise UndefinedInvariantError(f"{what} is undefined for graphs with n={g.n}")


# distances

def bfs_layers(adj: Sequence[int], source: int) -> list[int]:
    """Bitmasks of the vertices at distance 0, 1, 2, ... from ``source``."""
    seen = frontier = 1 << source
    layers = [frontier]
    while True:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        if not frontier:
            return layers
        seen |= frontier
        layers.append(frontier)


def all_pairs_distance(g: Graph) -> list[list[float]]:
    """Shortest-path lengths by breadth-first search; unreachable pairs are ``inf``."""
    dist = [[INF] * g.n for _ in range(g.n)]
    for s in range(g.n):
        row = dist[s]
        for d, layer in enumerate(bfs_layers(g.adj, s)):
            for v in bits(layer):
                row[v] = d
    return dist


def diameter(g: Graph) -> float:
    """Largest distance between two vertices; ``inf`` when ``g`` is disconnected."""
    _require_two_vertices(g, "diameter")
    d = _k.diameter(_k.as_array(g.adj), g.n)
    return INF if d < 0 else d


# vertex connectivity

def local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint paths between non-adjacent ``s`` and ``t``.

    Unit-capacity max-flow on the split digraph, where vertex ``v`` becomes a
    capacity-one arc ``v_in -> v_out`` and each edge ``{u, v}`` yields arcs
    ``u_out -> v_in`` and ``v_out -> u_in``.
    """
    if s == t or g.has_edge(s, t):
        raise ValueError("local connectivity needs two distinct non-adjacent vertices")
    return _k.local_connectivity(_k.as_array(g.adj), g.n, s, t, g.n)


def kappa(g: Graph) -> int:
    """Vertex connectivity.

    Complete graphs get ``n - 1`` by convention and disconnected graphs get 0.
    Otherwise this is the minimum, over non-adjacent pairs, of the number of
    internally disjoint paths joining them (Menger).
    """
    _require_two_vertices(g, "vertex connectivity")
    return _k.kappa(_k.as_array(g.adj), g.n)


def kappa_bruteforce(g: Graph) -> int:
    """Smallest vertex set whose removal leaves a disconnected graph, by exhaustive search."""
    _require_two_vertices(g, "vertex connectivity")
    verts = range(g.n)
    for size in range(g.n - 1):
        for removed in combinations(verts, size):
            rest = [v for v in verts if v not in removed]
            h = induced_subgraph(g, rest)
            if h.n >= 2 and not h.is_connected():
                return size
    return g.n - 1


# free vertices

def free_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose neighbourhood is a clique (simplicial vertices)."""
    return frozenset(bits(_k.free_mask(_k.as_array(g.adj), g.n)))


# chordality

@dataclass(frozen=True)
class Chordality:
    is_chordal: bool
    peo: Optional[tuple[int, ...]]
    # induced cycle of length >= 4, set only when not chordal
    hole: Optional[tuple[int, ...]] = None


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order; ties go to the lowest vertex."""
    return [int(v) for v in _k.mcs_order(_k.as_array(g.adj), g.n)]


def _shortest_path(adj: Sequence[int], a: int, b: int, allowed: int) -> Optional[list[int]]:
    parent = {a: a}
    seen = frontier = 1 << a
    while frontier and not seen >> b & 1:
        nxt = 0
        for v in bits(frontier):
            new = adj[v] & allowed & ~seen & ~nxt
            for u in bits(new):
                parent[u] = v
            nxt |= new
        seen |= nxt
        frontier = nxt
    if not seen >> b & 1:
        return None
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]


def _hole_through(adj: Sequence[int], n: int, v: int, a: int, b: int) -> Optional[tuple[int, ...]]:
    # a shortest a-b path avoiding v and its other neighbours closes an induced cycle
    allowed = ((1 << n) - 1) & ~(adj[v] | 1 << v) | (1 << a) | (1 << b)
    path = _shortest_path(adj, a, b, allowed)
    if path is None:
        return None
    return (v, *path)


def find_hole(adj: Sequence[int], n: int, hint: Optional[tuple[int, int, int]] = None) -> Optional[tuple[int, ...]]:
    """Induced cycle of length >= 4, or ``None`` when the graph is chordal."""
    if hint is not None:
        hole = _hole_through(adj, n, *hint)
        if hole is not None:
            return hole
    for v in range(n):
        nb = list(bits(adj[v]))
        for a, b in combinations(nb, 2):
            if not adj[a] >> b & 1:
                hole = _hole_through(adj, n, v, a, b)
                if hole is not None:
                    return hole
    return None


def chordality(g: Graph) -> Chordality:
    """Chordality test via maximum cardinality search.

    The reverse of the search order is a perfect elimination ordering exactly
    when the graph is chordal.  On failure an induced cycle of length at least
    four is extracted as a witness.
    """
    adj = _k.as_array(g.adj)
    order = _k.mcs_order(adj, g.n)
    v, a, b = _k.peo_violation(adj, g.n, order)
    if v < 0:
        return Chordality(True, tuple(int(x) for x in order[::-1]))
    hole = find_hole(g.adj, g.n, (v, a, b))
    if hole is None:
        raise AssertionError("perfect elimination check failed but no induced cycle exists")
    return Chordality(False, None, hole)


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    """Each vertex's neighbours that come later in ``order`` form a clique."""
    if sorted(order) != list(range(g.n)):
        return False
    later = g.vertex_mask
    for v in order:
        later &= ~(1 << v)
        if not is_clique(g.adj, g.adj[v] & later):
            return False
    return True


# aggregated report

@dataclass(frozen=True)
class InvariantReport:
    n: int
    diameter: float
    kappa: int
    free_set: frozenset[int]
    free_count: int
    is_connected: bool
    is_complete: bool
    is_chordal: bool
    gap: Optional[int]

    def to_record(self) -> dict:
        """JSON-ready dict with 1-based labels; an infinite diameter becomes ``"inf"``."""
        return {
            "n": self.n,
            "diameter": "inf" if self.diameter == INF else int(self.diameter),
            "kappa": self.kappa,
            "free_set": sorted(v + 1 for v in self.free_set),
            "free_count": self.free_count,
            "is_connected": self.is_connected,
            "is_complete": self.is_complete,
            "is_chordal": self.is_chordal,
            "gap": self.gap,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))

    def to_text(self) -> str:
        rec = self.to_record()
        lines = []
        for key, value in rec.items():
            if isinstance(value, bool):
                value = str(value).lower()
            elif isinstance(value, list):
                value = ",".join(map(str, value))
            elif value is None:
                value = "undefined"
            lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"


def build_report(n: int, complete: bool, diam: int, k: int, free: int, chordal: bool) -> InvariantReport:
    """Assemble a report from raw kernel outputs (``diam < 0`` means disconnected)."""
    connected = diam >= 0 or n <= 1
    diam_value = INF if diam < 0 else int(diam)
    f = int(free).bit_count()
    gap = None
    if connected and not complete:
        gap = (n + 2 - int(k)) - (f + diam_value)
    return InvariantReport(
        n=n,
        diameter=diam_value,
        kappa=int(k),
        free_set=frozenset(bits(int(free))),
        free_count=f,
        is_connected=connected,
        is_complete=bool(complete),
        is_chordal=bool(chordal),
        gap=gap,
    )


def invariant_report(g: Graph) -> InvariantReport:
    """All invariants of ``g``; ``gap`` is set only for connected non-complete graphs."""
    _require_two_vertices(g, "invariant report")
    adj = _k.as_array(g.adj)
    n = g.n
    return build_report(
        n,
        _k.is_complete(adj, n),
        _k.diameter(adj, n),
        _k.kappa(adj, n),
        _k.free_mask(adj, n),
        _k.is_chordal(adj, n),
    )
