"""Terminal strongly connected components of directed hypergraphs.

:func:`terminal_sccs` is the almost-linear traversal: a Tarjan-style depth
first search on the digraph generated by single-tail arcs, which collapses
every terminal component it finds into one union-find class and then follows
the multi-tail arcs whose tails have just become a single vertex. Per arc it
keeps a root (first visited tail vertex) and a counter of tail vertices seen
while that root was on the stack; an arc whose counter reaches ``|T(a)|`` is
parked on the root's pending stack until the root's component is collapsed.

Total cost is ``O(size(h) * alpha(|V|))`` where alpha is the inverse
Ackermann function from the union-find bounds.

The other entry points are slower reference routes used for cross-checking:
:func:`terminal_sccs_naive` (repeated projection + Tarjan + merge),
:func:`all_sccs_bruteforce` (full reachability matrix) and
:func:`tarjan_digraph_sccs` (plain digraph SCCs).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import asdict, dataclass, field

from .errors import EmptyHypergraph
from .hypergraph import Digraph, Hypergraph, graph_projection, image
from .reachability import reachability_relation
from .unionfind import UnionFind

NIL = -1


@dataclass(frozen=True, order=True)
class Component:
    members: tuple[int, ...]
    terminal: bool = field(default=False, compare=False)

    def __str__(self) -> str:
        body = " ".join(map(str, self.members))
        return f"T {body}" if self.terminal else body


@dataclass(frozen=True)
class RunStats:
    find_calls: int
    merge_calls: int
    makeset_calls: int
    fu_pushes: int
    f_pushes: int
    inner_loop_iterations: int

    def total(self) -> int:
        return sum(asdict(self).values())

    def lines(self) -> list[str]:
        return [f"{k}={v}" for k, v in asdict(self).items()]


@dataclass
class _Frame:
    u: int
    rep: int
    pending: list[int]
    heads: tuple[int, ...] | None = None
    pos: int = 0
    waiting: bool = False
    child_rep: int = NIL


class TraversalState:
    """Full state of one terminal-SCC traversal.

    Arrays are indexed by original vertex id and read through the current
    representative. ``arc_root`` / ``arc_count`` hold the per-arc root and
    counter (``NIL`` root for arcs never touched, and for single-tail arcs).
    """

    def __init__(self, h: Hypergraph, check_invariants: bool = False) -> None:
        n, m = h.vertex_count, len(h.arcs)
        self.hypergraph = h
        self.check_invariants = check_invariants
        self.counter = 0
        self.stack: list[int] = []
        self.on_stack = bytearray(n)
        self.finished = bytearray(n)
        self.index = [NIL] * n
        self.low = [NIL] * n
        self.is_term = bytearray(n)
        self.pending_arcs: list[list[int]] = [[] for _ in range(n)]
        self.arc_root = [NIL] * m
        self.arc_count = [0] * m
        self.uf = UnionFind(n)
        self.fu_pushes = 0
        self.f_pushes = 0
        self.inner_loop_iterations = 0
        self.checks_run = 0
        for u in range(n):
            self.uf.make_set(u)

    # -- traversal -----------------------------------------------------

    def run(self, order: Sequence[int] | None = None) -> TraversalState:
        vertices = range(self.hypergraph.vertex_count) if order is None else order
        for u in vertices:
            if self.index[u] == NIL:
                self._visit(u)
        if self.check_invariants:
            self._check()
        return self

    def _enter(self, u: int) -> _Frame:
        h, uf = self.hypergraph, self.uf
        rep = uf.find(u)
        pending: list[int] = []
        self.index[rep] = self.low[rep] = self.counter
        self.counter += 1
        self.is_term[rep] = 1
        self.stack.append(rep)
        self.on_stack[rep] = 1
        arcs, root, count = h.arcs, self.arc_root, self.arc_count
        for a in h.incidence[u]:
            tail = arcs[a].tail
            if len(tail) == 1:
                pending.append(a)
                self.f_pushes += 1
                continue
            if root[a] == NIL:
                root[a] = u
            r = uf.find(root[a])
            if self.on_stack[r]:
                count[a] += 1
                if count[a] == len(tail):
                    self.pending_arcs[r].append(a)
                    self.fu_pushes += 1
        if self.check_invariants:
            self._check()
        return _Frame(u, rep, pending)

    def _visit(self, start: int) -> None:
        arcs, uf = self.hypergraph.arcs, self.uf
        index, low, is_term, finished = self.index, self.low, self.is_term, self.finished
        frames = [self._enter(start)]
        while frames:
            fr = frames[-1]
            descended = False
            # arc-processing loop; re-entered after a collapse leaves arcs behind
            while True:
                rep = fr.rep
                if fr.heads is None:
                    if not fr.pending:
                        if low[rep] == index[rep] and is_term[rep]:
                            self._collapse(fr)
                            if fr.pending:
                                continue
                        break
                    fr.heads = arcs[fr.pending.pop()].head
                    fr.pos = 0
                while fr.pos < len(fr.heads):
                    if fr.waiting:
                        w_rep = fr.child_rep
                        fr.waiting = False
                    else:
                        self.inner_loop_iterations += 1
                        w_rep = uf.find(fr.heads[fr.pos])
                        if index[w_rep] == NIL:
                            fr.waiting = True
                            frames.append(self._enter(fr.heads[fr.pos]))
                            descended = True
                            break
                    if finished[w_rep]:
                        is_term[rep] = 0
                    else:
                        if low[w_rep] < low[rep]:
                            low[rep] = low[w_rep]
                        if not is_term[w_rep]:
                            is_term[rep] = 0
                    fr.pos += 1
                if descended:
                    break
                fr.heads = None
            if descended:
                continue

            rep = fr.rep
            if low[rep] == index[rep]:
                verdict = is_term[rep]
                while True:
                    v = self.stack.pop()
                    self.on_stack[v] = 0
                    finished[v] = 1
                    is_term[v] = verdict
                    if index[v] == index[rep]:
                        break
            frames.pop()
            if frames:
                frames[-1].child_rep = rep
            if self.check_invariants:
                self._check()

    def _collapse(self, fr: _Frame) -> None:
        """Merge everything above the root ``fr.rep`` on the stack into one class."""
        uf, index, stack = self.uf, self.index, self.stack
        rep = fr.rep
        i = index[rep]
        self._drain(rep, fr.pending)
        v = stack.pop()
        self.on_stack[v] = 0
        while index[v] > i:
            self._drain(v, fr.pending)
            rep = uf.merge(rep, v)
            v = stack.pop()
            self.on_stack[v] = 0
        index[rep] = i
        # low must be reset too: the surviving representative may be a vertex
        # whose own low value was above i
        self.low[rep] = i
        self.is_term[rep] = 1
        stack.append(rep)
        self.on_stack[rep] = 1
        fr.rep = rep
        if self.check_invariants:
            self._check()

    def _drain(self, v: int, into: list[int]) -> None:
        parked = self.pending_arcs[v]
        self.f_pushes += len(parked)
        while parked:
            into.append(parked.pop())

    # -- results -------------------------------------------------------

    def stats(self) -> RunStats:
        return RunStats(
            find_calls=self.uf.find_calls,
            merge_calls=self.uf.merge_calls,
            makeset_calls=self.uf.makeset_calls,
            fu_pushes=self.fu_pushes,
            f_pushes=self.f_pushes,
            inner_loop_iterations=self.inner_loop_iterations,
        )

    def components(self) -> list[Component]:
        classes = self.uf.classes()
        return [Component(tuple(c), bool(self.is_term[self.uf._root(c[0])])) for c in classes]

    # -- debug checks --------------------------------------------------

    def _check(self) -> None:
        """Recompute the structural invariants from scratch (debug mode only)."""
        self.checks_run += 1
        h, uf = self.hypergraph, self.uf
        rep_of = [uf._root(v) for v in range(h.vertex_count)]
        for v in range(h.vertex_count):
            if self.index[v] != NIL:
                r = rep_of[v]
                assert bool(self.on_stack[r]) != bool(self.finished[r]), (
                    f"representative {r} of visited vertex {v} must be on the stack "
                    "or finished, not both"
                )
        succ: dict[int, set[int]] = {}
        for a in h.arcs:
            tails = {rep_of[x] for x in a.tail}
            if len(tails) == 1:
                (t,) = tails
                succ.setdefault(t, set()).update(rep_of[y] for y in a.head)
        for a, arc in enumerate(h.arcs):
            r = self.arc_root[a]
            if r == NIL:
                continue
            seen = {rep_of[r]}
            todo = [rep_of[r]]
            while todo:
                x = todo.pop()
                for y in succ.get(x, ()):
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            expected = sum(
                1 for x in arc.tail if self.index[x] != NIL and rep_of[x] in seen
            )
            assert 0 <= self.arc_count[a] <= len(arc.tail)
            assert self.arc_count[a] == expected, (
                f"arc {a}: counter {self.arc_count[a]} != {expected} tail vertices "
                "reachable from its root"
            )


def run_terminal_scc(
    h: Hypergraph, order: Sequence[int] | None = None, check_invariants: bool = False
) -> TraversalState:
    """Run the traversal and return its final state (for inspection and tests)."""
    return TraversalState(h, check_invariants).run(order)


def terminal_sccs(
    h: Hypergraph, order: Sequence[int] | None = None, check_invariants: bool = False
) -> tuple[list[Component], RunStats]:
    """All final union-find classes, with terminal SCCs flagged.

    Classes flagged terminal are exactly the terminal SCCs of ``h``. Classes
    not flagged are whatever was left over and are not guaranteed to be SCCs.
    """
    state = run_terminal_scc(h, order, check_invariants)
    return state.components(), state.stats()


def terminal_components(h: Hypergraph, order: Sequence[int] | None = None) -> list[Component]:
    return [c for c in terminal_sccs(h, order)[0] if c.terminal]


def tarjan_digraph_sccs(g: Digraph) -> list[Component]:
    """SCCs of a digraph (iterative Tarjan), flagged terminal when no arc leaves them."""
    n = g.vertex_count
    succ = g.successors()
    index = [NIL] * n
    low = [NIL] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    comp_of = [NIL] * n
    comps: list[list[int]] = []
    counter = 0
    for s in range(n):
        if index[s] != NIL:
            continue
        work = [(s, 0)]
        index[s] = low[s] = counter
        counter += 1
        stack.append(s)
        on_stack[s] = 1
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == NIL:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = 1
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                members = []
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp_of[w] = len(comps)
                    members.append(w)
                    if w == v:
                        break
                comps.append(members)
    leaves = [True] * len(comps)
    for u, v in g.arcs:
        if comp_of[u] != comp_of[v]:
            leaves[comp_of[u]] = False
    return sorted(Component(tuple(sorted(c)), leaves[k]) for k, c in enumerate(comps))


def terminal_sccs_naive(h: Hypergraph) -> list[Component]:
    """Terminal SCCs by repeated projection, digraph Tarjan and vertex merging.

    Each round collapses every non-singleton terminal SCC of the projected
    digraph into a single vertex. When all terminal SCCs of the projection are
    singletons they are the terminal SCCs of the current hypergraph.
    """
    groups = [[v] for v in range(h.vertex_count)]
    cur = h
    while True:
        comps = tarjan_digraph_sccs(graph_projection(cur))
        if not any(c.terminal and len(c.members) > 1 for c in comps):
            break
        mapping = [NIL] * cur.vertex_count
        merged: list[list[int]] = []
        for c in comps:
            if c.terminal and len(c.members) > 1:
                for x in c.members:
                    mapping[x] = len(merged)
                merged.append(sorted(v for x in c.members for v in groups[x]))
            else:
                for x in c.members:
                    mapping[x] = len(merged)
                    merged.append(groups[x])
        cur = image(cur, mapping, len(merged))
        groups = merged
    return sorted(
        Component(tuple(sorted(groups[c.members[0]])), True) for c in comps if c.terminal
    )


def all_sccs_bruteforce(h: Hypergraph) -> list[Component]:
    """Every SCC from the full reachability matrix, with terminal flags."""
    rel = reachability_relation(h)
    rows = rel.rows
    assigned = [False] * h.vertex_count
    out = []
    for u in range(h.vertex_count):
        if assigned[u]:
            continue
        members = [v for v in rel.row(u) if (rows[v] >> u) & 1]
        mask = 0
        for v in members:
            assigned[v] = True
            mask |= 1 << v
        terminal = all(rows[v] & ~mask == 0 for v in members)
        out.append(Component(tuple(members), terminal))
    return sorted(out)


def has_sink(h: Hypergraph) -> bool:
    """True iff some vertex is reachable from every vertex."""
    if h.vertex_count == 0:
        raise EmptyHypergraph("sink query on an empty hypergraph")
    return len(terminal_components(h)) == 1


def is_strongly_connected(h: Hypergraph) -> bool:
    if h.vertex_count == 0:
        raise EmptyHypergraph("strong connectivity query on an empty hypergraph")
    terms = terminal_components(h)
    return len(terms) == 1 and len(terms[0].members) == h.vertex_count
