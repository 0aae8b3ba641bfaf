"""Immutable simple graphs stored as bitrow adjacency, plus edge-list and graph6 I/O.

Vertices are ``0..n-1`` internally.  Everything that leaves the library as
text (edge lists, certificates, reports) uses 1-based labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Base class for invalid graph input."""


class InvalidParameterError(GraphError):
    pass


class Graph6Error(GraphError):
    pass


class EdgeListError(GraphError):
    pass


GRAPH6_MAX_N = 62
MAX_N = 63  # bitrows must fit a signed 64-bit word


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_size(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise InvalidParameterError(f"vertex count must lie in 0..{MAX_N}, got {n}")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[i]`` has bit ``j`` set iff ``{i, j}`` is an edge."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        _check_size(self.n)
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} bitrows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full or row < 0:
                raise GraphError(f"row {i} references a vertex outside 0..{self.n - 1}")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # skips validation; for internal constructors whose output is symmetric by design
        _check_size(n)
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from 0-based edges.  Duplicate edges are merged."""
        _check_size(n)
        adj = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge ({i}, {j}) out of range for n={n}")
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls._trusted(n, tuple(adj))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        """0-based edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_complete(self) -> bool:
        full = self.vertex_mask
        return all(row | (1 << i) == full for i, row in enumerate(self.adj))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return reach(self.adj, 0, self.vertex_mask) == self.vertex_mask

    def components(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest vertex."""
        return components_within(self.adj, self.vertex_mask)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={[(i + 1, j + 1) for i, j in self.edges()]})"


def reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` using only vertices in ``allowed``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components_within(adj: Sequence[int], allowed: int) -> list[int]:
    comps = []
    rest = allowed
    while rest:
        comp = reach(adj, (rest & -rest).bit_length() - 1, allowed)
        comps.append(comp)
        rest &= ~comp
    return comps


def is_clique(adj: Sequence[int], mask: int) -> bool:
    for v in bits(mask):
        if mask & ~adj[v] != 1 << v:
            return False
    return True


# constructors

def path_graph(k: int) -> Graph:
    if k < 1:
        raise InvalidParameterError(f"path needs at least one vertex, got k={k}")
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def complete_graph(k: int) -> Graph:
    if k < 0:
        raise InvalidParameterError(f"k must be nonnegative, got {k}")
    full = (1 << k) - 1
    return Graph._trusted(k, tuple(full & ~(1 << i) for i in range(k)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise InvalidParameterError(f"cycle needs at least 3 vertices, got k={k}")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def empty_graph(k: int = 0) -> Graph:
    """Edgeless graph on ``k`` vertices."""
    if k < 0:
        raise InvalidParameterError(f"k must be nonnegative, got {k}")
    return Graph._trusted(k, (0,) * k)


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; the vertices of each operand follow those of the previous one."""
    adj: list[int] = []
    for g in graphs:
        off = len(adj)
        adj.extend(row << off for row in g.adj)
    return Graph._trusted(len(adj), tuple(adj))


def union(g: Graph, g_labels: Sequence, h: Graph, h_labels: Sequence) -> Graph:
    """Union of two graphs whose vertices are identified through shared labels.

    ``g_labels[i]`` is the label of vertex ``i`` of ``g`` (likewise for ``h``).
    Labels must be mutually comparable; the result lists vertices in sorted
    label order.
    """
    for name, graph, labels in (("g", g, g_labels), ("h", h, h_labels)):
        if len(labels) != graph.n:
            raise InvalidParameterError(f"{name} has {graph.n} vertices but {len(labels)} labels")
        if len(set(labels)) != len(labels):
            raise InvalidParameterError(f"label map for {name} is not injective")
    merged = sorted(set(g_labels) | set(h_labels))
    index = {label: k for k, label in enumerate(merged)}
    edges = [(index[g_labels[i]], index[g_labels[j]]) for i, j in g.edges()]
    edges += [(index[h_labels[i]], index[h_labels[j]]) for i, j in h.edges()]
    return Graph.from_edges(len(merged), edges)


def join(g: Graph, h: Graph) -> Graph:
    """Join product: disjoint union of ``g`` and ``h`` plus every edge between them."""
    off = g.n
    g_all = (1 << off) - 1
    h_all = ((1 << h.n) - 1) << off
    adj = tuple(row | h_all for row in g.adj) + tuple((row << off) | g_all for row in h.adj)
    return Graph._trusted(g.n + h.n, adj)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph on ``keep``, relabelled to ``0..len(keep)-1`` in increasing vertex order."""
    verts = sorted(set(keep))
    for v in verts:
        if not 0 <= v < g.n:
            raise InvalidParameterError(f"vertex {v} out of range for n={g.n}")
    pos = {v: k for k, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in bits(g.adj[v]):
            k = pos.get(u)
            if k is not None:
                row |= 1 << k
        adj.append(row)
    return Graph._trusted(len(verts), tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.n, ((perm[i], perm[j]) for i, j in g.edges()))


def is_isomorphic_bruteforce(g: Graph, h: Graph) -> bool:
    """Permutation search; only sensible for small graphs."""
    from itertools import permutations

    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    target = set(h.edges())
    g_edges = g.edges()
    for perm in permutations(range(g.n)):
        if all(tuple(sorted((perm[i], perm[j]))) in target for i, j in g_edges):
            return True
    return False


# graph6

def _pairs(n: int) -> Iterator[tuple[int, int]]:
    # graph6 column order: (0,1),(0,2),(1,2),(0,3),...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_graph6(g: Graph) -> bytes:
    if g.n > GRAPH6_MAX_N:
        raise Graph6Error(f"graph6 supports n <= {GRAPH6_MAX_N}, got {g.n}")
    out = bytearray([g.n + 63])
    acc = nbits = 0
    for i, j in _pairs(g.n):
        acc = (acc << 1) | (g.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(acc + 63)
            acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 range 63..126")
    n = data[0] - 63
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"graph6 size field {n} exceeds {GRAPH6_MAX_N}")
    m = n * (n - 1) // 2
    expected = 1 + (m + 5) // 6
    if len(data) != expected:
        raise Graph6Error(f"graph6 for n={n} needs {expected} bytes, got {len(data)}")
    adj = [0] * n
    k = 0
    body = data[1:]
    for i, j in _pairs(n):
        if (body[k // 6] - 63) >> (5 - k % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        k += 1
    if m % 6 and (body[-1] - 63) & ((1 << (6 - m % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph._trusted(n, tuple(adj))


def read_graph6_lines(text: bytes | str) -> list[Graph]:
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    return [decode_graph6(line) for line in text.splitlines() if line.strip()]


# edge list: "n m" then m lines "i j", 1-based; '#' lines ignored

def format_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines += [f"{i + 1} {j + 1}" for i, j in edges]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        try:
            rows.append((lineno, [int(p) for p in parts]))
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected integers, got {s!r}") from None
    if not rows:
        raise EdgeListError("missing header line 'n m'")
    lineno, header = rows[0]
    if len(header) != 2 or header[0] < 0 or header[1] < 0:
        raise EdgeListError(f"line {lineno}: header must be 'n m' with nonnegative integers")
    n, m = header
    if len(rows) - 1 != m:
        raise EdgeListError(f"header announces {m} edges, found {len(rows) - 1}")
    edges = set()
    for lineno, pair in rows[1:]:
        if len(pair) != 2:
            raise EdgeListError(f"line {lineno}: expected 'i j'")
        i, j = pair
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise EdgeListError(f"line {lineno}: invalid edge {i} {j} for n={n}")
        edge = (min(i, j) - 1, max(i, j) - 1)
        if edge in edges:
            raise EdgeListError(f"line {lineno}: duplicate edge {i} {j}")
        edges.add(edge)
    return Graph.from_edges(n, edges)


def edge_list(g: Graph) -> list[tuple[int, int]]:
    """1-based normalized edge list."""
    return [(i + 1, j + 1) for i, j in g.edges()]

