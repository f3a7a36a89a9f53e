"""Set families, the subset hypergraphs built from them, and minimal sets.

For a family of distinct sets over ``0 .. d-1`` the subset hypergraph has a
vertex per set and per domain element, and two arcs per set ``S``: one from
the set vertex to its elements and one from the elements back to the set
vertex. Then ``v[S]`` reaches ``v[S']`` exactly when ``S' <= S``.

The minimal-set hypergraph adds a counting gadget and a ``superset`` vertex
that ``v[S]`` reaches exactly when ``S`` has a proper subset in the family.

Both constructions need every set to have at least two elements. When some
input set is smaller, two fresh elements ``d`` and ``d + 1`` are appended to
every set (this does not change the inclusion order). Results are always
reported in terms of the original family.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .errors import BadN, InvalidSetFamily
from .hypergraph import Hypergraph
from .reachability import ReachScratch, reachable_set


@dataclass(frozen=True)
class SetFamily:
    domain_size: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.domain_size < 0:
            raise InvalidSetFamily("domain size must be non-negative")
        canon = tuple(tuple(sorted(set(s))) for s in self.sets)
        for s in canon:
            for x in s:
                if not 0 <= x < self.domain_size:
                    raise InvalidSetFamily(f"element {x} not in 0..{self.domain_size - 1}")
        if len(set(canon)) != len(canon):
            raise InvalidSetFamily("sets must be pairwise distinct")
        object.__setattr__(self, "sets", canon)

    @classmethod
    def of(cls, domain_size: int, sets: Iterable[Iterable[int]]) -> SetFamily:
        return cls(domain_size, tuple(tuple(s) for s in sets))

    def __len__(self) -> int:
        return len(self.sets)

    def input_size(self) -> int:
        """``|D| + sum |S|``."""
        return self.domain_size + sum(len(s) for s in self.sets)

    def masks(self) -> list[int]:
        return [sum(1 << x for x in s) for s in self.sets]


@dataclass(frozen=True)
class SubsetHypergraph:
    """A subset or minimal-set hypergraph plus its vertex numbering.

    Set ``k`` is vertex ``k``; element ``x`` of the (padded) domain is vertex
    ``m + x``. The minimal-set variant then numbers ``w[S_k]``, the counters
    ``c_0 .. c_d`` and finally ``superset``.
    """

    hypergraph: Hypergraph
    family: SetFamily
    domain_size: int
    padded: bool
    minimal: bool = False

    @property
    def set_count(self) -> int:
        return len(self.family)

    def set_vertex(self, k: int) -> int:
        return k

    def element_vertex(self, x: int) -> int:
        return self.set_count + x

    def w_vertex(self, k: int) -> int:
        self._need_minimal()
        return self.set_count + self.domain_size + k

    def counter_vertex(self, i: int) -> int:
        self._need_minimal()
        return 2 * self.set_count + self.domain_size + i

    @property
    def superset_vertex(self) -> int:
        self._need_minimal()
        return 2 * self.set_count + 2 * self.domain_size + 1

    def _need_minimal(self) -> None:
        if not self.minimal:
            raise AttributeError("only the minimal-set hypergraph has this vertex")


def _padded(f: SetFamily) -> tuple[list[tuple[int, ...]], int, bool]:
    if any(len(s) <= 1 for s in f.sets):
        d = f.domain_size
        return [s + (d, d + 1) for s in f.sets], d + 2, True
    return list(f.sets), f.domain_size, False


def _add_subset_arcs(h: Hypergraph, sets: list[tuple[int, ...]]) -> None:
    m = len(sets)
    for k, s in enumerate(sets):
        elems = [m + x for x in s]
        h.add_hyperarc([k], elems)
        h.add_hyperarc(elems, [k])


def build_subset_hypergraph(f: SetFamily) -> SubsetHypergraph:
    sets, d, padded = _padded(f)
    h = Hypergraph(len(sets) + d)
    _add_subset_arcs(h, sets)
    return SubsetHypergraph(h.freeze(), f, d, padded)


def build_minimal_hypergraph(f: SetFamily) -> SubsetHypergraph:
    """Subset hypergraph extended with ``w[S]``, ``c_0 .. c_d`` and ``superset``.

    The arc from ``c_i`` to the ``w[S]`` with ``|S| = i`` is omitted when no
    set has ``i`` elements, since its head would be empty.
    """
    sets, d, padded = _padded(f)
    m = len(sets)
    h = Hypergraph(2 * m + 2 * d + 2)
    _add_subset_arcs(h, sets)
    w0, c0 = m + d, 2 * m + d
    sup = c0 + d + 1
    for k, s in enumerate(sets):
        h.add_hyperarc([k], [c0 + len(s) - 1])
    by_size: dict[int, list[int]] = {}
    for k, s in enumerate(sets):
        by_size.setdefault(len(s), []).append(w0 + k)
    for i in range(d + 1):
        if i in by_size:
            h.add_hyperarc([c0 + i], by_size[i])
    for i in range(1, d + 1):
        h.add_hyperarc([c0 + i], [c0 + i - 1])
    for k in range(m):
        h.add_hyperarc([k, w0 + k], [sup])
    for k in range(m):
        h.add_hyperarc([sup], [k])
    return SubsetHypergraph(h.freeze(), f, d, padded, minimal=True)


def minimal_sets(f: SetFamily) -> list[int]:
    """Indices of the inclusion-minimal sets, ascending.

    ``S`` is minimal iff ``superset`` is not reachable from ``v[S]``; one
    reachability query per set.
    """
    sh = build_minimal_hypergraph(f)
    h, sup = sh.hypergraph, sh.superset_vertex
    scratch = ReachScratch(h)
    return [k for k in range(len(f)) if sup not in reachable_set(h, k, scratch)]


def minimal_sets_bruteforce(f: SetFamily) -> list[int]:
    masks = f.masks()
    return [
        k
        for k, s in enumerate(masks)
        if not any(j != k and t & s == t for j, t in enumerate(masks))
    ]


def minimal_sets_via_sccs(f: SetFamily) -> list[int]:
    """Minimal sets as the ``v[S]`` outside the SCC of ``superset``.

    Uses the brute-force SCC oracle, so it is only meant for small inputs.
    """
    from .terminal_scc import all_sccs_bruteforce

    sh = build_minimal_hypergraph(f)
    sup = sh.superset_vertex
    comp = next(c for c in all_sccs_bruteforce(sh.hypergraph) if sup in c.members)
    inside = set(comp.members)
    return [k for k in range(len(f)) if k not in inside]


def is_sperner(f: SetFamily) -> bool:
    """True iff no set of the family contains another."""
    return len(minimal_sets(f)) == len(f)


def lower_bound_family(n: int) -> SetFamily:
    """Family whose inclusion order has ``C(n/2, n/4)^2`` covering pairs.

    First all ``n/4``-subsets of ``0 .. n/2-1``, then every set made of
    ``0 .. n/2-1`` plus ``n/4`` elements of ``n/2 .. n-1``.
    """
    if n < 4 or n % 4:
        raise BadN(f"n must be a positive multiple of 4, got {n}")
    half, quarter = n // 2, n // 4
    low = list(range(half))
    first = [c for c in combinations(low, quarter)]
    second = [tuple(low) + c for c in combinations(range(half, n), quarter)]
    return SetFamily(n, tuple(first + second))


def subset_order_transitive_reduction(f: SetFamily) -> list[tuple[int, int]]:
    """Covering pairs ``(i, j)`` with ``S_i`` strictly inside ``S_j``, sorted."""
    masks = f.masks()
    m = len(masks)
    below = [0] * m
    for j, t in enumerate(masks):
        for i, s in enumerate(masks):
            if i != j and s & t == s:
                below[j] |= 1 << i
    pairs = []
    for j in range(m):
        covered = 0
        rest = below[j]
        while rest:
            low = rest & -rest
            covered |= below[low.bit_length() - 1]
            rest ^= low
        cover = below[j] & ~covered
        pairs.extend((i, j) for i in range(m) if (cover >> i) & 1)
    return sorted(pairs)


def linear_extension(f: SetFamily) -> list[int]:
    """Set indices ordered so that subsets come before their supersets.

    Reverses a topological order of the subset hypergraph and keeps the set
    vertices.
    """
    from .transitive_reduction import topological_sort

    sh = build_subset_hypergraph(f)
    order = topological_sort(sh.hypergraph)
    return [v for v in reversed(order) if v < len(f)]


def is_linear_extension(f: SetFamily, order: list[int]) -> bool:
    if sorted(order) != list(range(len(f))):
        return False
    pos = {k: p for p, k in enumerate(order)}
    masks = f.masks()
    return all(
        pos[i] < pos[j]
        for i, s in enumerate(masks)
        for j, t in enumerate(masks)
        if i != j and s & t == s
    )
