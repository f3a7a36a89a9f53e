"""Directed hypergraph model.

Vertices are dense integers ``0 .. vertex_count - 1``. A hyperarc is a pair of
non-empty vertex sets (tail, head), stored sorted and duplicate-free. Besides
the arc list, the hypergraph keeps for every vertex ``u`` the list of arcs
whose tail contains ``u``; these incidence lists are what the traversal
algorithms iterate on.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

from .errors import EmptyHead, EmptyTail, FrozenHypergraph, VertexOutOfRange


@dataclass(frozen=True, order=True)
class Hyperarc:
    tail: tuple[int, ...]
    head: tuple[int, ...]

    @property
    def is_simple(self) -> bool:
        return len(self.tail) == 1

    def __str__(self) -> str:
        return " ".join(map(str, self.tail)) + " -> " + " ".join(map(str, self.head))


@dataclass(frozen=True)
class Digraph:
    vertex_count: int
    arcs: frozenset[tuple[int, int]]

    def successors(self) -> list[list[int]]:
        """Adjacency lists, each sorted ascending."""
        succ: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in sorted(self.arcs):
            succ[u].append(v)
        return succ

    def as_hypergraph(self) -> Hypergraph:
        h = Hypergraph(self.vertex_count)
        for u, v in sorted(self.arcs):
            h.add_hyperarc((u,), (v,))
        return h


def _canonical(vertices: Iterable[int], n: int) -> tuple[int, ...]:
    out = tuple(sorted(set(vertices)))
    for v in out:
        if not 0 <= v < n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{n - 1}")
    return out


class Hypergraph:
    """A directed hypergraph with per-vertex tail incidence lists.

    The hypergraph is mutable while it is being built and is meant to be
    treated as read-only afterwards; :meth:`freeze` enforces this. Duplicate
    hyperarcs are kept as distinct entries.
    """

    def __init__(self, vertex_count: int = 0) -> None:
        if vertex_count < 0:
            raise ValueError("vertex count must be non-negative")
        self.vertex_count = vertex_count
        self.arcs: list[Hyperarc] = []
        self.incidence: list[list[int]] = [[] for _ in range(vertex_count)]
        self._frozen = False

    @classmethod
    def from_arcs(
        cls, vertex_count: int, arcs: Iterable[tuple[Iterable[int], Iterable[int]]]
    ) -> Hypergraph:
        h = cls(vertex_count)
        for tail, head in arcs:
            h.add_hyperarc(tail, head)
        return h

    def add_hyperarc(self, tail: Iterable[int], head: Iterable[int]) -> int:
        """Append the arc ``(tail, head)`` and return its index."""
        if self._frozen:
            raise FrozenHypergraph("hypergraph is frozen")
        t = _canonical(tail, self.vertex_count)
        hd = _canonical(head, self.vertex_count)
        if not t:
            raise EmptyTail("hyperarc tail is empty")
        if not hd:
            raise EmptyHead("hyperarc head is empty")
        index = len(self.arcs)
        self.arcs.append(Hyperarc(t, hd))
        for u in t:
            self.incidence[u].append(index)
        return index

    def freeze(self) -> Hypergraph:
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    def size(self) -> int:
        return self.vertex_count + sum(len(a.tail) + len(a.head) for a in self.arcs)

    def __len__(self) -> int:
        return self.vertex_count

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.arcs == other.arcs

    def __repr__(self) -> str:
        return f"Hypergraph(vertex_count={self.vertex_count}, arcs={len(self.arcs)})"

    def permuted_arcs(self, order: Sequence[int]) -> Hypergraph:
        """Copy of this hypergraph with the arc list reordered by ``order``."""
        return Hypergraph.from_arcs(
            self.vertex_count, ((self.arcs[i].tail, self.arcs[i].head) for i in order)
        )


def new_hypergraph(n: int) -> Hypergraph:
    return Hypergraph(n)


def size(h: Hypergraph) -> int:
    """``|V| + sum(|T(a)| + |H(a)|)`` over all arcs."""
    return h.size()


def graph_projection(h: Hypergraph) -> Digraph:
    """Digraph generated by the arcs with a single tail vertex."""
    arcs = {(a.tail[0], w) for a in h.arcs if a.is_simple for w in a.head}
    return Digraph(h.vertex_count, frozenset(arcs))


def image(
    h: Hypergraph, f: Callable[[int], int] | Sequence[int], vertex_count: int
) -> Hypergraph:
    """Hypergraph obtained by mapping every vertex through ``f``.

    ``f`` is either a callable or a sequence indexed by vertex. Tails and heads
    are deduplicated after mapping, so the image never grows.
    """
    fmap = f if callable(f) else f.__getitem__
    mapped = [fmap(v) for v in range(h.vertex_count)]
    for v in mapped:
        if not 0 <= v < vertex_count:
            raise VertexOutOfRange(f"image vertex {v} not in 0..{vertex_count - 1}")
    return Hypergraph.from_arcs(
        vertex_count,
        (([mapped[x] for x in a.tail], [mapped[x] for x in a.head]) for a in h.arcs),
    )
