"""Generators for the extremal witnesses and the two extremal families.

``build_gamma`` and ``build_omega`` give the smallest witnesses for each
realizable invariant tuple; ``build_gd`` and ``build_fq`` build arbitrary
members of the path-like family (connectivity one) and the join family
(diameter two).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .graph import (
    Graph,
    InvalidParameterError,
    complete_graph,
    disjoint_union,
    join,
    union,
)


def _sizes(values: Sequence[int], what: str) -> tuple[int, ...]:
    out = tuple(int(x) for x in values)
    for x in out:
        if x < 1:
            raise InvalidParameterError(f"{what}: clique sizes must be >= 1, got {x}")
    return out


@dataclass(frozen=True)
class GdSpec:
    """Parameters of a path-like extremal graph.

    ``single_cliques[i - 1]`` lists the clique sizes hanging off path vertex
    ``u_i`` alone; ``pair_cliques[j - 1]`` lists those attached to both
    ``u_j`` and ``u_{j+1}``.
    """

    d: int
    hv_size: int = 0
    hw_size: int = 0
    single_cliques: tuple[tuple[int, ...], ...] = field(default=None)
    pair_cliques: tuple[tuple[int, ...], ...] = field(default=None)

    def __post_init__(self):
        if self.d < 2:
            raise InvalidParameterError(f"d must be >= 2, got {self.d}")
        if self.hv_size < 0 or self.hw_size < 0:
            raise InvalidParameterError("hv_size and hw_size must be >= 0")
        singles = self.single_cliques
        pairs = self.pair_cliques
        if singles is None:
            singles = ((),) * (self.d - 1)
        if pairs is None:
            pairs = ((),) * (self.d - 2)
        if len(singles) != self.d - 1:
            raise InvalidParameterError(f"need {self.d - 1} single-vertex families, got {len(singles)}")
        if len(pairs) != self.d - 2:
            raise InvalidParameterError(f"need {self.d - 2} pair families, got {len(pairs)}")
        singles = tuple(_sizes(s, f"H{i}") for i, s in enumerate(singles, 1))
        pairs = tuple(_sizes(s, f"H{j},{j + 1}") for j, s in enumerate(pairs, 1))
        object.__setattr__(self, "single_cliques", singles)
        object.__setattr__(self, "pair_cliques", pairs)

    @classmethod
    def from_families(
        cls,
        d: int,
        hv: int = 0,
        hw: int = 0,
        singles: Mapping[int, Sequence[int]] = None,
        pairs: Mapping[int, Sequence[int]] = None,
    ) -> "GdSpec":
        """Sparse constructor: ``singles[i]`` feeds ``u_i``, ``pairs[j]`` feeds ``u_j, u_{j+1}``."""
        singles = singles or {}
        pairs = pairs or {}
        for i in singles:
            if not 1 <= i <= d - 1:
                raise InvalidParameterError(f"single family index {i} outside 1..{d - 1}")
        for j in pairs:
            if not 1 <= j <= d - 2:
                raise InvalidParameterError(f"pair family index {j} outside 1..{d - 2}")
        return cls(
            d,
            hv,
            hw,
            tuple(tuple(singles.get(i, ())) for i in range(1, d)),
            tuple(tuple(pairs.get(j, ())) for j in range(1, d - 1)),
        )

    @property
    def n(self) -> int:
        return (self.d + 1 + self.hv_size + self.hw_size
                + sum(map(sum, self.single_cliques)) + sum(map(sum, self.pair_cliques)))

    def to_text(self) -> str:
        parts = [f"d={self.d}", f"hv={self.hv_size}", f"hw={self.hw_size}"]
        for i, sizes in enumerate(self.single_cliques, 1):
            if sizes:
                key = f"H{i}" if _split_pair(str(i)) is None else f"H({i})"
                parts.append(f"{key}={','.join(map(str, sizes))}")
        for j, sizes in enumerate(self.pair_cliques, 1):
            if sizes:
                parts.append(f"H({j},{j + 1})={','.join(map(str, sizes))}" if j >= 9
                             else f"H{j}{j + 1}={','.join(map(str, sizes))}")
        return "; ".join(parts)


@dataclass(frozen=True)
class FqSpec:
    """``K_q`` joined with disjoint cliques of the given sizes."""

    q: int
    part_sizes: tuple[int, ...]

    def __post_init__(self):
        if self.q < 2:
            raise InvalidParameterError(f"q must be >= 2, got {self.q}")
        sizes = _sizes(self.part_sizes, "parts")
        if len(sizes) < 2:
            raise InvalidParameterError(f"need at least two parts, got {len(sizes)}")
        object.__setattr__(self, "part_sizes", sizes)

    @property
    def n(self) -> int:
        return self.q + sum(self.part_sizes)

    def to_text(self) -> str:
        return f"q={self.q}; parts={','.join(map(str, self.part_sizes))}"


# one-line text forms, e.g. "d=7; hv=2; hw=0; H1=1,1; H23=2,1" and "q=3; parts=1,1,2"

def _split_pair(digits: str):
    for cut in range(1, len(digits)):
        a, b = digits[:cut], digits[cut:]
        if b[0] != "0" and int(b) == int(a) + 1:
            return int(a)
    return None


def _parse_fields(text: str) -> dict[str, str]:
    fields = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise InvalidParameterError(f"expected key=value, got {chunk!r}")
        key, value = (s.strip() for s in chunk.split("=", 1))
        if key in fields:
            raise InvalidParameterError(f"duplicate key {key!r}")
        fields[key] = value
    return fields


def _int_list(value: str, key: str) -> list[int]:
    if not value:
        return []
    try:
        return [int(x) for x in value.split(",")]
    except ValueError:
        raise InvalidParameterError(f"{key}: expected comma-separated integers, got {value!r}") from None


def _int(value: str, key: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise InvalidParameterError(f"{key}: expected an integer, got {value!r}") from None


_FAMILY_KEY = re.compile(r"^H(?:(\d+)|\((\d+)\)|\(?(\d+),(\d+)\)?)$")


def parse_family_key(key: str) -> tuple[str, int]:
    """``"H5"`` -> ``("single", 5)``; ``"H23"``, ``"H2,3"``, ``"H(2,3)"`` -> ``("pair", 2)``.

    Concatenated digits that read as two consecutive integers are a pair; use
    ``"H(12)"`` for the single family at index 12.
    """
    m = _FAMILY_KEY.match(key)
    if not m:
        raise InvalidParameterError(f"unrecognized family key {key!r}")
    bare, boxed, a, b = m.groups()
    if a is not None:
        if int(b) != int(a) + 1:
            raise InvalidParameterError(f"{key}: pair families need consecutive indices")
        return "pair", int(a)
    if boxed is not None:
        return "single", int(boxed)
    j = _split_pair(bare) if len(bare) > 1 else None
    if j is not None:
        return "pair", j
    return "single", int(bare)


def parse_gd_spec(text: str) -> GdSpec:
    fields = _parse_fields(text)
    if "d" not in fields:
        raise InvalidParameterError("gd spec needs d=<int>")
    d = _int(fields.pop("d"), "d")
    hv = _int(fields.pop("hv", "0"), "hv")
    hw = _int(fields.pop("hw", "0"), "hw")
    singles, pairs = {}, {}
    for key, value in fields.items():
        kind, idx = parse_family_key(key)
        target = singles if kind == "single" else pairs
        if idx in target:
            raise InvalidParameterError(f"family {key!r} given twice")
        target[idx] = _int_list(value, key)
    return GdSpec.from_families(d, hv, hw, singles, pairs)


def parse_fq_spec(text: str) -> FqSpec:
    fields = _parse_fields(text)
    unknown = set(fields) - {"q", "parts"}
    if unknown or "q" not in fields or "parts" not in fields:
        raise InvalidParameterError("fq spec must be 'q=<int>; parts=<int>,<int>,...'")
    return FqSpec(_int(fields["q"], "q"), tuple(_int_list(fields["parts"], "parts")))


# builders

def build_gamma(d: int, f: int) -> Graph:
    """Path on ``d + 1`` vertices with ``f - 2`` extra leaves on its second vertex."""
    if d < 2 or f < 2:
        raise InvalidParameterError(f"need d >= 2 and f >= 2, got d={d}, f={f}")
    n = d + f - 1
    edges = [(i, i + 1) for i in range(d)]
    edges += [(1, leaf) for leaf in range(d + 1, n)]
    return Graph.from_edges(n, edges)


def build_omega(q: int, s: int, t: int) -> Graph:
    """Two cliques ``K_{q+s}`` and ``K_{q+t}`` glued along a common ``K_q`` (labels ``0..q-1``)."""
    if q < 2 or s < 1 or t < 1:
        raise InvalidParameterError(f"need q >= 2, s >= 1, t >= 1, got q={q}, s={s}, t={t}")
    left = list(range(q + s))
    right = list(range(q)) + list(range(q + s, q + s + t))
    return union(complete_graph(q + s), left, complete_graph(q + t), right)


def build_gd(spec: GdSpec) -> Graph:
    """Member of the path-like family.

    Vertex order: ``v, u_1, ..., u_{d-1}, w``, then ``H^v``, ``H^w``, the
    single-attachment cliques by index, then the pair-attachment cliques.
    """
    d = spec.d
    v, w = 0, d
    edges = [(i, i + 1) for i in range(d)]
    nxt = d + 1

    def clique(size: int, anchors: Sequence[int]) -> None:
        nonlocal nxt
        members = range(nxt, nxt + size)
        nxt += size
        edges.extend((a, b) for a in members for b in members if a < b)
        edges.extend((a, x) for a in members for x in anchors)

    clique(spec.hv_size, (v, 1))
    clique(spec.hw_size, (w, d - 1))
    for i, sizes in enumerate(spec.single_cliques, 1):
        for size in sizes:
            clique(size, (i,))
    for j, sizes in enumerate(spec.pair_cliques, 1):
        for size in sizes:
            clique(size, (j, j + 1))
    return Graph.from_edges(nxt, edges)


def build_fq(spec: FqSpec) -> Graph:
    """``K_q`` joined with the disjoint union of the part cliques; the core is ``0..q-1``."""
    return join(complete_graph(spec.q), disjoint_union(*(complete_graph(k) for k in spec.part_sizes)))
