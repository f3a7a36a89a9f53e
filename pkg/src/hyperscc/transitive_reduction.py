"""Transitive reductions of reachability preorders, topological sorting and
the reduction-size growth experiment.

The canonical reduction of a preorder links the members of each mutual
reachability class in an ascending cycle and adds, between classes, the
covering pairs of the condensation from smallest member to smallest member.
All transitive reductions of a preorder have the same size, so the pair count
is a property of the preorder alone.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from graphlib import TopologicalSorter

from .errors import BadN, CyclicHypergraph, NotTransitive
from .hypergraph import Hypergraph
from .reachability import ReachRelation, _bits, reachability_relation
from .setfamily import build_subset_hypergraph, lower_bound_family, subset_order_transitive_reduction

MAX_GROWTH_N = 16


@dataclass(frozen=True)
class Preorder:
    """A reflexive, transitive relation (validated when ``check`` is set)."""

    relation: ReachRelation

    @classmethod
    def of(cls, relation: ReachRelation, check: bool = True) -> Preorder:
        if check and not (relation.is_reflexive() and relation.is_transitive()):
            raise NotTransitive("relation is not reflexive and transitive")
        return cls(relation)

    @property
    def vertex_count(self) -> int:
        return self.relation.vertex_count

    def classes(self) -> list[list[int]]:
        """Mutual-reachability classes, sorted by smallest member."""
        rows = self.relation.rows
        n = len(rows)
        cols = [0] * n
        for u, r in enumerate(rows):
            for v in _bits(r):
                cols[v] |= 1 << u
        seen = 0
        out = []
        for u in range(n):
            if (seen >> u) & 1:
                continue
            mask = rows[u] & cols[u]
            seen |= mask
            out.append(list(_bits(mask)))
        return out


@dataclass(frozen=True)
class TransitiveReduction:
    vertex_count: int
    pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.pairs))

    def closure(self) -> ReachRelation:
        """Reflexive-transitive closure of the pairs."""
        return closure_of(self.vertex_count, self.pairs)


def closure_of(n: int, pairs: Iterable[tuple[int, int]]) -> ReachRelation:
    succ: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        succ[u].append(v)
    rows = []
    for s in range(n):
        seen = {s}
        todo = [s]
        while todo:
            for y in succ[todo.pop()]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        rows.append(sum(1 << v for v in seen))
    return ReachRelation(n, tuple(rows))


def transitive_reduction(p: Preorder, check: bool = False) -> TransitiveReduction:
    if check:
        p = Preorder.of(p.relation, check=True)
    rows = p.relation.rows
    classes = p.classes()
    pairs: set[tuple[int, int]] = set()
    rep_mask = 0
    for members in classes:
        rep_mask |= 1 << members[0]
        if len(members) > 1:
            pairs.update(zip(members, members[1:] + members[:1]))
    # strictly-above classes of each representative, as a mask of representatives
    above = {c[0]: rows[c[0]] & rep_mask & ~(1 << c[0]) for c in classes}
    for r, up in above.items():
        covered = 0
        for q in _bits(up):
            covered |= above[q]
        pairs.update((r, s) for s in _bits(up & ~covered))
    return TransitiveReduction(p.vertex_count, frozenset(pairs))


def transitive_reduction_size(h: Hypergraph) -> int:
    """Pair count of the reduction of ``h``'s reachability relation."""
    rel = reachability_relation(h)
    return len(transitive_reduction(Preorder(rel)))


def topological_sort(h: Hypergraph) -> list[int]:
    """Vertices ordered so that ``u`` precedes ``v`` whenever ``u`` reaches ``v``.

    Among vertices that are ready at the same time the smallest id goes first.
    """
    p = Preorder(reachability_relation(h))
    for members in p.classes():
        if len(members) > 1:
            raise CyclicHypergraph(f"vertices {members} are mutually reachable")
    ts: TopologicalSorter[int] = TopologicalSorter()
    for v in range(h.vertex_count):
        ts.add(v)
    for u, v in transitive_reduction(p):
        ts.add(v, u)
    ts.prepare()
    order: list[int] = []
    while ts.is_active():
        ready = sorted(ts.get_ready())
        order.extend(ready)
        ts.done(*ready)
    return order


def is_topological_order(h: Hypergraph, order: list[int]) -> bool:
    if sorted(order) != list(range(h.vertex_count)):
        return False
    rel = reachability_relation(h)
    pos = {v: i for i, v in enumerate(order)}
    return all(pos[u] <= pos[v] for u, v in rel.pairs())


@dataclass(frozen=True)
class GrowthRow:
    n: int
    hypergraph_size: int
    reduction_size: int
    poset_pairs: int

    @property
    def ratio(self) -> float:
        return self.reduction_size / self.hypergraph_size

    def tsv(self) -> str:
        return (
            f"{self.n}\t{self.hypergraph_size}\t{self.reduction_size}"
            f"\t{self.poset_pairs}\t{self.ratio:.6f}"
        )


GROWTH_HEADER = "n\tsize\treduction_size\tposet_pairs\tratio"


def growth_experiment(n_values: Iterable[int]) -> list[GrowthRow]:
    """Reduction size against hypergraph size for the lower-bound families."""
    ns = list(n_values)
    for n in ns:
        if n < 4 or n % 4 or n > MAX_GROWTH_N:
            raise BadN(f"n must be a multiple of 4 in 4..{MAX_GROWTH_N}, got {n}")
    rows = []
    for n in ns:
        fam = lower_bound_family(n)
        h = build_subset_hypergraph(fam).hypergraph
        rows.append(
            GrowthRow(
                n,
                h.size(),
                transitive_reduction_size(h),
                len(subset_order_transitive_reduction(fam)),
            )
        )
    return rows
