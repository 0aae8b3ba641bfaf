"""Structural recognition of extremal graphs with checkable certificates.

A connected non-complete graph is extremal when
``free_count + diameter == n + 2 - kappa``.  :func:`classify` decides
membership in the two extremal families from the set of non-free vertices
alone and never looks at that equation; :func:`check_equality` evaluates the
equation directly.  Agreement between the two is what the exhaustive
verification checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

from . import _kernels as _k
from .families import build_gamma, build_omega
from .graph import Graph, GraphError, bits, components_within, is_clique
from .invariants import InvariantReport, invariant_report


class PreconditionError(GraphError):
    """Input graph is disconnected, complete, or too small for classification."""


class InvalidSequenceError(ValueError):
    pass


class Attached(NamedTuple):
    """A clique hanging off the path: its vertices and the path vertices it sees."""

    vertices: tuple[int, ...]
    attachment: tuple[int, ...]


@dataclass(frozen=True)
class GdCertificate:
    path: tuple[int, ...]
    components: tuple[Attached, ...]

    @property
    def d(self) -> int:
        return len(self.path) - 1

    @property
    def interior(self) -> tuple[int, ...]:
        return self.path[1:-1]


@dataclass(frozen=True)
class FqCertificate:
    core: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]


def _labels(vs) -> str:
    return ",".join(str(v + 1) for v in vs)


@dataclass(frozen=True)
class NotExtremal:
    gap: int

    def to_text(self) -> str:
        return f"NOT_EXTREMAL gap={self.gap}"

    def to_record(self) -> dict:
        return {"class": "NOT_EXTREMAL", "gap": self.gap}


@dataclass(frozen=True)
class GdMember:
    certificate: GdCertificate
    d: int

    def to_text(self) -> str:
        comps = ",".join(f"({{{_labels(c.vertices)}}};{{{_labels(c.attachment)}}})"
                         for c in self.certificate.components)
        return f"GD d={self.d} path={_labels(self.certificate.path)} components={comps}"

    def to_record(self) -> dict:
        return {
            "class": "GD",
            "d": self.d,
            "path": [v + 1 for v in self.certificate.path],
            "components": [
                {"vertices": [v + 1 for v in c.vertices], "attachment": [u + 1 for u in c.attachment]}
                for c in self.certificate.components
            ],
        }


@dataclass(frozen=True)
class FqMember:
    certificate: FqCertificate
    q: int

    def to_text(self) -> str:
        parts = ",".join(f"{{{_labels(p)}}}" for p in self.certificate.parts)
        return f"FQ q={self.q} core={_labels(self.certificate.core)} parts={parts}"

    def to_record(self) -> dict:
        return {
            "class": "FQ",
            "q": self.q,
            "core": [v + 1 for v in self.certificate.core],
            "parts": [[v + 1 for v in p] for p in self.certificate.parts],
        }


Classification = Union[NotExtremal, GdMember, FqMember]


def is_member(c: Classification) -> bool:
    return isinstance(c, (GdMember, FqMember))


# recognition on raw bitrows

def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _recognize_gd(adj: Sequence[int], n: int, nonfree: int) -> Optional[GdMember]:
    k = nonfree.bit_count()
    if k == 0:
        return None
    # the non-free vertices must induce a path
    deg_sum = 0
    for u in bits(nonfree):
        du = (adj[u] & nonfree).bit_count()
        if du > 2:
            return None
        deg_sum += du
    if deg_sum != 2 * (k - 1):
        return None
    start = -1
    for u in bits(nonfree):
        if (adj[u] & nonfree).bit_count() <= 1:
            start = u
            break
    path = [start]
    seen = 1 << start
    while len(path) < k:
        step = adj[path[-1]] & nonfree & ~seen
        if not step:
            return None
        u = _low(step)
        path.append(u)
        seen |= 1 << u
    pos = {u: i for i, u in enumerate(path)}

    full = (1 << n) - 1
    comps = []
    for comp in components_within(adj, full & ~nonfree):
        if not is_clique(adj, comp):
            return None
        attach = -1
        for x in bits(comp):
            a = adj[x] & nonfree
            if attach < 0:
                attach = a
            elif a != attach:
                return None
        where = sorted(pos[u] for u in bits(attach))
        if len(where) == 2:
            if where[1] != where[0] + 1:
                return None
        elif len(where) != 1:
            return None
        comps.append((comp, tuple(where)))

    first, last = (0,), (k - 1,)
    ends = [c for c in comps if c[1] == first or c[1] == last]
    if k == 1:
        if len(ends) < 2:
            return None
    elif not any(c[1] == first for c in ends) or not any(c[1] == last for c in ends):
        return None
    # orient so the endpoint clique holding the lowest label sits at v
    head = min(ends, key=lambda c: _low(c[0]))
    if k > 1 and head[1] == last:
        path.reverse()
        comps = [(m, tuple(sorted(k - 1 - p for p in where))) for m, where in comps]
        head = next(c for c in comps if c[0] == head[0])
    tail = min((c for c in comps if c[1] == last and c[0] != head[0]), key=lambda c: _low(c[0]))
    v, w = _low(head[0]), _low(tail[0])
    cert = GdCertificate(
        path=(v, *path, w),
        components=tuple(
            Attached(tuple(bits(m)), tuple(path[p] for p in where))
            for m, where in sorted(comps, key=lambda c: _low(c[0]))
        ),
    )
    return GdMember(cert, k + 1)


def _recognize_fq(adj: Sequence[int], n: int, nonfree: int) -> Optional[FqMember]:
    full = (1 << n) - 1
    universal = 0
    for v in range(n):
        if adj[v] | (1 << v) == full:
            universal |= 1 << v
    q = universal.bit_count()
    if universal != nonfree or q < 2:
        return None
    parts = components_within(adj, full & ~universal)
    if len(parts) < 2 or not all(is_clique(adj, p) for p in parts):
        return None
    return FqMember(FqCertificate(tuple(bits(universal)), tuple(tuple(bits(p)) for p in parts)), q)


def recognize(adj: Sequence[int], n: int, free: int) -> Optional[Union[GdMember, FqMember]]:
    """Family membership from bitrows and the free-vertex mask, or ``None``."""
    nonfree = ((1 << n) - 1) & ~free
    return _recognize_gd(adj, n, nonfree) or _recognize_fq(adj, n, nonfree)


def _require_classifiable(g: Graph, report: Optional[InvariantReport] = None) -> None:
    if g.n < 3:
        raise PreconditionError(f"classification needs n >= 3, got n={g.n}")
    if report is not None:
        connected, complete = report.is_connected, report.is_complete
    else:
        connected, complete = g.is_connected(), g.is_complete()
    if not connected:
        raise PreconditionError("graph is disconnected")
    if complete:
        raise PreconditionError("graph is complete")


def classify(g: Graph, report: Optional[InvariantReport] = None) -> Classification:
    """Place ``g`` in one of the two extremal families or report its gap.

    ``report`` may be passed to reuse an already computed invariant report;
    only its free set and gap are read.
    """
    _require_classifiable(g, report)
    if report is not None:
        free = sum(1 << v for v in report.free_set)
    else:
        free = int(_k.free_mask(_k.as_array(g.adj), g.n))
    member = recognize(g.adj, g.n, free)
    if member is not None:
        return member
    if report is None:
        report = invariant_report(g)
    return NotExtremal(report.gap)


def check_equality(g: Graph) -> bool:
    """``True`` iff ``free_count + diameter == n + 2 - kappa``."""
    report = invariant_report(g) if g.n >= 2 else None
    _require_classifiable(g, report)
    return report.gap == 0


def certificate_problems(g: Graph, c: Classification) -> list[str]:
    """Independent re-check of a membership certificate; an empty list means valid."""
    if isinstance(c, GdMember):
        return _gd_problems(g, c)
    if isinstance(c, FqMember):
        return _fq_problems(g, c)
    return []


def _gd_problems(g: Graph, c: GdMember) -> list[str]:
    problems = []
    path = c.certificate.path
    d = len(path) - 1
    if c.d != d or d < 2:
        problems.append(f"d={c.d} does not match path length {d}")
    if len(set(path)) != len(path):
        problems.append("path repeats a vertex")
    for a in range(len(path)):
        for b in range(a + 1, len(path)):
            if g.has_edge(path[a], path[b]) != (b == a + 1):
                problems.append(f"path is not induced at positions {a},{b}")
    interior = set(path[1:-1])
    free = set(bits(int(_k.free_mask(_k.as_array(g.adj), g.n))))
    if set(range(g.n)) - free != interior:
        problems.append("non-free vertices differ from the path interior")
    covered = [v for comp in c.certificate.components for v in comp.vertices]
    if sorted(covered) != sorted(set(range(g.n)) - interior):
        problems.append("components do not partition the off-path vertices")
    order = {u: i for i, u in enumerate(path)}
    for comp in c.certificate.components:
        vs, att = comp.vertices, comp.attachment
        if not is_clique(g.adj, sum(1 << v for v in vs)):
            problems.append(f"component {vs} is not a clique")
        if not set(att) <= interior or not 1 <= len(att) <= 2:
            problems.append(f"component {vs} has invalid attachment {att}")
            continue
        if len(att) == 2 and abs(order[att[0]] - order[att[1]]) != 1:
            problems.append(f"component {vs} attaches to non-consecutive path vertices")
        for v in vs:
            if {u for u in interior if g.has_edge(v, u)} != set(att):
                problems.append(f"vertex {v} does not see exactly its attachment")
    for end, anchor in ((path[0], path[1]), (path[-1], path[-2])):
        holder = [comp for comp in c.certificate.components if end in comp.vertices]
        if len(holder) != 1 or tuple(holder[0].attachment) != (anchor,):
            problems.append(f"endpoint {end} is not in a clique attached only to {anchor}")
    ends = [next((comp for comp in c.certificate.components if e in comp.vertices), None)
            for e in (path[0], path[-1])]
    if ends[0] is not None and ends[0] is ends[1]:
        problems.append("both endpoints lie in the same component")
    return problems


def _fq_problems(g: Graph, c: FqMember) -> list[str]:
    problems = []
    core = set(c.certificate.core)
    universal = {v for v in range(g.n) if g.degree(v) == g.n - 1}
    if core != universal:
        problems.append("core is not the universal vertex set")
    if len(core) != c.q or c.q < 2:
        problems.append(f"q={c.q} inconsistent with core size {len(core)}")
    rest = g.vertex_mask & ~sum(1 << v for v in core)
    comps = sorted(tuple(bits(m)) for m in components_within(g.adj, rest))
    if sorted(tuple(sorted(p)) for p in c.certificate.parts) != comps:
        problems.append("parts are not the components outside the core")
    if len(comps) < 2:
        problems.append("fewer than two parts")
    for p in comps:
        if not is_clique(g.adj, sum(1 << v for v in p)):
            problems.append(f"part {p} is not a clique")
    free = set(bits(int(_k.free_mask(_k.as_array(g.adj), g.n))))
    if set(range(g.n)) - free != core:
        problems.append("non-free vertices differ from the core")
    return problems


# invariant sequences

def realizable_sequence(n: int, q: int, f: int, d: int) -> bool:
    """Whether some connected non-complete graph has ``(n, kappa, free_count, diameter) == (n, q, f, d)``.

    Only tuples on the extremal hyperplane ``f + d == n + 2 - q`` are accepted.
    """
    if f + d != n + 2 - q:
        raise InvalidSequenceError(f"({n}, {q}, {f}, {d}) violates f + d = n + 2 - q")
    return (n >= 3 and q == 1 and f >= 2 and d >= 2) or (n >= 4 and q >= 2 and f >= 2 and d == 2)


def witness_for_sequence(n: int, q: int, f: int, d: int) -> Graph:
    if not realizable_sequence(n, q, f, d):
        raise InvalidSequenceError(f"({n}, {q}, {f}, {d}) is not realizable")
    if q == 1:
        return build_gamma(d, f)
    return build_omega(q, 1, f - 1)


def predicted_depth(c: Classification, n: int) -> Optional[int]:
    """Depth of the binomial edge ideal quotient for family members, else ``None``."""
    if isinstance(c, GdMember):
        return n + 1
    if isinstance(c, FqMember):
        return n + 2 - c.q
    return None
