"""Exhaustive checks over every connected labelled graph on ``n`` vertices.

Graphs are enumerated by edge mask, bit ``k`` standing for the ``k``-th vertex
pair in graph6 column order.  The mask space is cut into work units by fixing
the top bits; each unit yields a partial :class:`VerificationSummary` and the
partials are merged in unit order, so results do not depend on ``jobs``.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import _kernels as _k
from .graph import Graph, InvalidParameterError, encode_graph6
from .recognize import FqMember, GdMember, realizable_sequence, recognize

DEFAULT_MAX_N = 7
UNIT_BITS = 6


def _check_n(n: int, allow_n8: bool) -> None:
    cap = 8 if allow_n8 else DEFAULT_MAX_N
    if not 2 <= n <= cap:
        hint = " (n=8 needs allow_n8)" if n == 8 else ""
        raise InvalidParameterError(f"n must lie in 2..{cap}, got {n}{hint}")


def graph_from_mask(mask: int, n: int) -> Graph:
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph._trusted(n, tuple(adj))


def enumerate_connected(n: int, allow_n8: bool = False) -> Iterator[Graph]:
    """All connected labelled graphs on ``n`` vertices in ascending edge-mask order."""
    _check_n(n, allow_n8)
    pi, pj = _k.pair_arrays(n)
    for _, lo, hi in work_units(n):
        for mask in _k.connected_masks(n, lo, hi, pi, pj):
            yield graph_from_mask(int(mask), n)


@dataclass
class VerificationSummary:
    n: int
    total_graphs: int = 0
    connected: int = 0
    non_complete_connected: int = 0
    extremal: int = 0
    gd_members: int = 0
    fq_members: int = 0
    mismatches: list[str] = field(default_factory=list)
    lemma_violations: list[str] = field(default_factory=list)
    chordality_violations: list[str] = field(default_factory=list)
    realized_tuples: set[tuple[int, int, int, int]] = field(default_factory=set)

    _COUNTS = ("total_graphs", "connected", "non_complete_connected", "extremal", "gd_members", "fq_members")
    _LISTS = ("mismatches", "lemma_violations", "chordality_violations")

    def merge(self, other: "VerificationSummary") -> "VerificationSummary":
        if other.n != self.n:
            raise ValueError("cannot merge summaries for different n")
        out = VerificationSummary(self.n)
        for name in self._COUNTS:
            setattr(out, name, getattr(self, name) + getattr(other, name))
        for name in self._LISTS:
            setattr(out, name, sorted(getattr(self, name) + getattr(other, name)))
        out.realized_tuples = self.realized_tuples | other.realized_tuples
        return out

    @property
    def ok(self) -> bool:
        return not (self.mismatches or self.lemma_violations or self.chordality_violations)

    def violations(self) -> dict[str, list[str]]:
        return {name: getattr(self, name) for name in self._LISTS}

    def to_record(self) -> dict:
        rec = {"n": self.n}
        rec.update({name: getattr(self, name) for name in self._COUNTS})
        rec.update({name: list(getattr(self, name)) for name in self._LISTS})
        rec["realized_tuples"] = [list(t) for t in sorted(self.realized_tuples)]
        return rec

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))

    def to_text(self) -> str:
        lines = [f"n: {self.n}"]
        lines += [f"{name}: {getattr(self, name)}" for name in self._COUNTS]
        lines += [f"{name}: {len(getattr(self, name))}" for name in self._LISTS]
        tuples = " ".join(f"({','.join(map(str, t))})" for t in sorted(self.realized_tuples))
        lines.append(f"realized_tuples: {tuples}")
        lines.append(f"verdict: {'ok' if self.ok else 'FAILED'}")
        return "\n".join(lines) + "\n"


def _scan_unit(args: tuple[int, int, int]) -> VerificationSummary:
    n, lo, hi = args
    pi, pj = _k.pair_arrays(n)
    masks, rows, complete, diam, kap, free, chordal = _k.scan_masks(n, lo, hi, pi, pj)
    s = VerificationSummary(n, total_graphs=hi - lo, connected=len(masks))
    for idx in range(len(masks)):
        if complete[idx]:
            continue
        s.non_complete_connected += 1
        d, q, fm = int(diam[idx]), int(kap[idx]), int(free[idx])
        f = fm.bit_count()
        gap = (n + 2 - q) - (f + d)
        adj = tuple(rows[idx].tolist())
        member = recognize(adj, n, fm)
        extremal = gap == 0
        if extremal:
            s.extremal += 1
            s.realized_tuples.add((n, q, f, d))
        if isinstance(member, GdMember):
            s.gd_members += 1
        elif isinstance(member, FqMember):
            s.fq_members += 1
        if extremal != (member is not None) or gap < 0:
            s.mismatches.append(_g6(adj, n))
        if extremal and d >= 3 and q >= 2:
            s.lemma_violations.append(_g6(adj, n))
        if extremal and not chordal[idx]:
            s.chordality_violations.append(_g6(adj, n))
    return s


def _g6(adj, n: int) -> str:
    return encode_graph6(Graph._trusted(n, adj)).decode("ascii")


def work_units(n: int) -> list[tuple[int, int, int]]:
    m = n * (n - 1) // 2
    k = min(UNIT_BITS, m)
    width = 1 << (m - k)
    return [(n, u * width, (u + 1) * width) for u in range(1 << k)]


def verify_classification(
    n: int,
    jobs: int = 1,
    allow_n8: bool = False,
    progress: Optional[Callable[[int, int], None]] = None,
) -> VerificationSummary:
    """Compare the extremal equation with structural classification on every graph of order ``n``.

    Also collects extremal graphs with diameter >= 3 and kappa >= 2, and
    extremal graphs that are not chordal.  ``progress(done, total)`` is
    called after each work unit.
    """
    _check_n(n, allow_n8)
    if jobs < 1:
        raise InvalidParameterError(f"jobs must be >= 1, got {jobs}")
    units = work_units(n)
    summary = VerificationSummary(n)
    if jobs == 1:
        results = map(_scan_unit, units)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(_scan_unit, units)
    try:
        for done, part in enumerate(results, 1):
            summary = summary.merge(part)
            if progress is not None:
                progress(done, len(units))
    finally:
        if pool is not None:
            pool.shutdown()
    return summary


def predicted_tuples(n: int) -> set[tuple[int, int, int, int]]:
    """All ``(n, q, f, d)`` on the extremal hyperplane that the realizability rule accepts."""
    out = set()
    for q in range(1, n + 2):
        for d in range(1, n + 2 - q + 1):
            f = n + 2 - q - d
            if f >= 0 and realizable_sequence(n, q, f, d):
                out.add((n, q, f, d))
    return out


@dataclass(frozen=True)
class SequenceCheck:
    n: int
    realized: frozenset
    predicted: frozenset

    @property
    def agree(self) -> bool:
        return self.realized == self.predicted

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "realized": [list(t) for t in sorted(self.realized)],
            "predicted": [list(t) for t in sorted(self.predicted)],
            "agree": self.agree,
        }

    def to_text(self) -> str:
        def fmt(ts):
            return " ".join(f"({','.join(map(str, t))})" for t in sorted(ts))

        return (f"n: {self.n}\npredicted: {fmt(self.predicted)}\nrealized: {fmt(self.realized)}\n"
                f"agree: {str(self.agree).lower()}\n")


def verify_sequences(
    n: int,
    jobs: int = 1,
    allow_n8: bool = False,
    summary: Optional[VerificationSummary] = None,
) -> SequenceCheck:
    """Realized extremal invariant tuples against the realizability rule.

    Pass a ``summary`` from :func:`verify_classification` to skip the rescan.
    """
    if summary is None:
        summary = verify_classification(n, jobs=jobs, allow_n8=allow_n8)
    return SequenceCheck(n, frozenset(summary.realized_tuples), frozenset(predicted_tuples(n)))
