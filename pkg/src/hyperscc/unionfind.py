"""Disjoint-set forest with union by rank, path compression and call counters."""

from __future__ import annotations

from .errors import DoubleInit, MergeSameClass, NotRepresentative, VertexOutOfRange

_UNSET = -1


class UnionFind:
    """Union-find over the universe ``0 .. n-1``.

    Elements start uninitialized and must be registered with :meth:`make_set`.
    The three counters record how many times each operation was invoked, so
    callers can check operation-count bounds.
    """

    def __init__(self, n: int) -> None:
        self._parent = [_UNSET] * n
        self._rank = [0] * n
        self._find_calls = 0
        self._merge_calls = 0
        self._makeset_calls = 0

    def __len__(self) -> int:
        return len(self._parent)

    @property
    def find_calls(self) -> int:
        return self._find_calls

    @property
    def merge_calls(self) -> int:
        return self._merge_calls

    @property
    def makeset_calls(self) -> int:
        return self._makeset_calls

    def _check(self, u: int) -> None:
        if not 0 <= u < len(self._parent):
            raise VertexOutOfRange(f"element {u} not in 0..{len(self._parent) - 1}")

    def make_set(self, u: int) -> None:
        self._check(u)
        if self._parent[u] != _UNSET:
            raise DoubleInit(f"element {u} already initialized")
        self._parent[u] = u
        self._makeset_calls += 1

    def find(self, u: int) -> int:
        """Representative of ``u``'s class; compresses the path to the root."""
        self._find_calls += 1
        return self._root(u)

    def _root(self, u: int) -> int:
        parent = self._parent
        if parent[u] == _UNSET:
            raise KeyError(f"element {u} was never initialized")
        root = u
        while parent[root] != root:
            root = parent[root]
        while parent[u] != root:
            parent[u], u = root, parent[u]
        return root

    def is_representative(self, u: int) -> bool:
        return self._parent[u] == u

    def merge(self, u: int, v: int) -> int:
        """Union the classes represented by ``u`` and ``v``; return the new root.

        The root of higher rank wins; on equal ranks the smaller id wins.
        """
        self._check(u)
        self._check(v)
        if u == v:
            raise MergeSameClass(f"cannot merge {u} with itself")
        for x in (u, v):
            if self._parent[x] != x:
                raise NotRepresentative(f"{x} is not a class representative")
        self._merge_calls += 1
        ru, rv = self._rank[u], self._rank[v]
        if ru < rv or (ru == rv and v < u):
            u, v = v, u
        self._parent[v] = u
        if ru == rv:
            self._rank[u] += 1
        return u

    def classes(self) -> list[list[int]]:
        """Partition of the initialized elements, sorted by smallest member."""
        groups: dict[int, list[int]] = {}
        for u in range(len(self._parent)):
            if self._parent[u] != _UNSET:
                groups.setdefault(self._root(u), []).append(u)
        return sorted(groups.values())
