"""Forward B-reachability.

A vertex ``v`` is reachable from ``u`` when ``u == v`` or some arc has ``v`` in
its head and every tail vertex reachable from ``u``. The single-source query
runs in ``O(size(h))`` by counting, per arc, how many tail vertices have been
reached; the arc fires once that count hits ``|T(a)|``.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .errors import VertexOutOfRange
from .hypergraph import Hypergraph


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _pack(vertices: list[int], n: int) -> int:
    buf = bytearray((n + 7) // 8)
    for v in vertices:
        buf[v >> 3] |= 1 << (v & 7)
    return int.from_bytes(buf, "little")


@dataclass(frozen=True)
class ReachSet:
    """Vertices reachable from ``source``, stored as an int bitset."""

    source: int
    members: int

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self.members >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return _bits(self.members)

    def __len__(self) -> int:
        return self.members.bit_count()

    def sorted(self) -> list[int]:
        return list(_bits(self.members))


@dataclass(frozen=True)
class ReachRelation:
    """Reachability matrix; ``rows[u]`` is the bitset of vertices reached from ``u``."""

    vertex_count: int
    rows: tuple[int, ...]

    def __call__(self, u: int, v: int) -> bool:
        return (self.rows[u] >> v) & 1 == 1

    def row(self, u: int) -> list[int]:
        return list(_bits(self.rows[u]))

    def is_reflexive(self) -> bool:
        return all((r >> u) & 1 for u, r in enumerate(self.rows))

    def is_transitive(self) -> bool:
        for r in self.rows:
            for v in _bits(r):
                if self.rows[v] & ~r:
                    return False
        return True

    def pairs(self) -> set[tuple[int, int]]:
        return {(u, v) for u, r in enumerate(self.rows) for v in _bits(r)}


class ReachScratch:
    """Reusable per-arc counters for repeated queries on one hypergraph.

    Counters are reset lazily: each query bumps a generation number and a
    counter is considered zero unless its stamp matches. A scratch object must
    not be shared between threads.
    """

    def __init__(self, h: Hypergraph) -> None:
        self.hypergraph = h
        self.count = [0] * len(h.arcs)
        self.stamp = [0] * len(h.arcs)
        self.generation = 0
        self.steps = 0


def reachable_set(h: Hypergraph, u: int, scratch: ReachScratch | None = None) -> ReachSet:
    """All vertices reachable from ``u``."""
    if not 0 <= u < h.vertex_count:
        raise VertexOutOfRange(f"vertex {u} not in 0..{h.vertex_count - 1}")
    if scratch is None or scratch.hypergraph is not h:
        scratch = ReachScratch(h)
    scratch.generation += 1
    gen = scratch.generation
    count, stamp = scratch.count, scratch.stamp
    arcs, incidence = h.arcs, h.incidence

    seen = bytearray(h.vertex_count)
    seen[u] = 1
    found = [u]
    todo = [u]
    steps = 0
    while todo:
        x = todo.pop()
        steps += 1
        for a in incidence[x]:
            steps += 1
            if stamp[a] != gen:
                stamp[a] = gen
                count[a] = 0
            count[a] += 1
            if count[a] == len(arcs[a].tail):
                for y in arcs[a].head:
                    steps += 1
                    if not seen[y]:
                        seen[y] = 1
                        found.append(y)
                        todo.append(y)
    scratch.steps += steps
    return ReachSet(u, _pack(found, h.vertex_count))


def is_reachable(h: Hypergraph, u: int, v: int) -> bool:
    if not 0 <= v < h.vertex_count:
        raise VertexOutOfRange(f"vertex {v} not in 0..{h.vertex_count - 1}")
    return v in reachable_set(h, u)


def reachability_relation(h: Hypergraph) -> ReachRelation:
    """Full reachability matrix, one linear query per vertex."""
    scratch = ReachScratch(h)
    rows = tuple(reachable_set(h, u, scratch).members for u in range(h.vertex_count))
    return ReachRelation(h.vertex_count, rows)


def reachable_set_fixpoint(h: Hypergraph, u: int) -> set[int]:
    """Naive fixpoint used as an oracle: fire arcs until nothing changes."""
    current = {u}
    changed = True
    while changed:
        changed = False
        for a in h.arcs:
            if set(a.tail) <= current and not set(a.head) <= current:
                current |= set(a.head)
                changed = True
    return current
