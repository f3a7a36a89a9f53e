"""Horn formulas and entailment through hypergraph reachability.

Variables are numbered ``1 .. n``. In the encoding hypergraph variable ``i``
is vertex ``i - 1``, the constant true is vertex ``n`` and false is ``n + 1``.
``F |= X_i => X_j`` holds exactly when ``j`` is reachable from ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidFormula, TooManyVariables, VertexOutOfRange
from .hypergraph import Hypergraph
from .reachability import ReachScratch, reachable_set
from .terminal_scc import is_strongly_connected, terminal_components

MAX_BRUTEFORCE_VARS = 20


@dataclass(frozen=True)
class Implication:
    premises: tuple[int, ...]
    conclusion: int


@dataclass(frozen=True)
class Fact:
    var: int


@dataclass(frozen=True)
class Goal:
    premises: tuple[int, ...]


Clause = Implication | Fact | Goal


def _vars_of(c: Clause) -> tuple[int, ...]:
    if isinstance(c, Implication):
        return (*c.premises, c.conclusion)
    if isinstance(c, Fact):
        return (c.var,)
    return c.premises


@dataclass(frozen=True)
class HornFormula:
    """A conjunction of Horn clauses over ``X_1 .. X_n``.

    Construction validates ids and requires every variable to occur in some
    clause.
    """

    n_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        if self.n_vars < 1:
            raise InvalidFormula("a formula needs at least one variable")
        object.__setattr__(self, "clauses", tuple(self.clauses))
        seen = set()
        for c in self.clauses:
            if isinstance(c, (Implication, Goal)) and not c.premises:
                raise InvalidFormula(f"clause {c} has no premises")
            for v in _vars_of(c):
                if not 1 <= v <= self.n_vars:
                    raise InvalidFormula(f"variable {v} not in 1..{self.n_vars}")
                seen.add(v)
        missing = sorted(set(range(1, self.n_vars + 1)) - seen)
        if missing:
            raise InvalidFormula(f"variables never used: {missing}")

    def atom_count(self) -> int:
        return sum(len(_vars_of(c)) for c in self.clauses)

    def satisfied_by(self, model: tuple[bool, ...]) -> bool:
        """``model[i - 1]`` is the value of ``X_i``."""
        for c in self.clauses:
            if isinstance(c, Implication):
                if all(model[p - 1] for p in c.premises) and not model[c.conclusion - 1]:
                    return False
            elif isinstance(c, Fact):
                if not model[c.var - 1]:
                    return False
            elif all(model[p - 1] for p in c.premises):
                return False
        return True


@dataclass(frozen=True)
class HornHypergraph:
    hypergraph: Hypergraph
    n_vars: int

    @property
    def true_vertex(self) -> int:
        return self.n_vars

    @property
    def false_vertex(self) -> int:
        return self.n_vars + 1

    def vertex(self, var: int) -> int:
        if not 1 <= var <= self.n_vars:
            raise VertexOutOfRange(f"variable {var} not in 1..{self.n_vars}")
        return var - 1

    def variable(self, vertex: int) -> int | None:
        """Variable id of a vertex, or None for the two constants."""
        return vertex + 1 if 0 <= vertex < self.n_vars else None


def build_horn_hypergraph(f: HornFormula) -> HornHypergraph:
    n = f.n_vars
    t, fls = n, n + 1
    h = Hypergraph(n + 2)
    for c in f.clauses:
        if isinstance(c, Implication):
            h.add_hyperarc([p - 1 for p in c.premises], [c.conclusion - 1])
        elif isinstance(c, Fact):
            h.add_hyperarc([t], [c.var - 1])
        else:
            h.add_hyperarc([p - 1 for p in c.premises], [fls])
    h.add_hyperarc([fls], range(n))
    for i in range(n):
        h.add_hyperarc([i], [t])
    return HornHypergraph(h.freeze(), n)


def entails_implication(f: HornFormula, i: int, j: int) -> bool:
    """Whether every model of ``f`` satisfies ``X_i => X_j``."""
    hh = build_horn_hypergraph(f)
    return hh.vertex(j) in reachable_set(hh.hypergraph, hh.vertex(i))


@lru_cache(maxsize=64)
def models(f: HornFormula) -> tuple[int, ...]:
    """Every model of ``f`` as a bitmask (bit ``i - 1`` is ``X_i``)."""
    if f.n_vars > MAX_BRUTEFORCE_VARS:
        raise TooManyVariables(f"{f.n_vars} variables exceeds {MAX_BRUTEFORCE_VARS}")
    checks = []
    for c in f.clauses:
        if isinstance(c, Implication):
            checks.append((sum(1 << (p - 1) for p in c.premises), 1 << (c.conclusion - 1)))
        elif isinstance(c, Fact):
            checks.append((0, 1 << (c.var - 1)))
        else:
            checks.append((sum(1 << (p - 1) for p in c.premises), 0))
    # a clause fails when all premises hold and the conclusion (if any) does not
    return tuple(
        m
        for m in range(1 << f.n_vars)
        if not any(m & pre == pre and not m & concl for pre, concl in checks)
    )


def entails_bruteforce(f: HornFormula, i: int, j: int) -> bool:
    """Same question answered by enumerating all ``2^n`` assignments."""
    for v in (i, j):
        if not 1 <= v <= f.n_vars:
            raise VertexOutOfRange(f"variable {v} not in 1..{f.n_vars}")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    return not any(m & bi and not m & bj for m in models(f))


def _variable_reach_rows(hh: HornHypergraph) -> list[int]:
    h = hh.hypergraph
    scratch = ReachScratch(h)
    mask = (1 << hh.n_vars) - 1
    return [reachable_set(h, v, scratch).members & mask for v in range(hh.n_vars)]


def variable_implied_by_all(f: HornFormula) -> int | None:
    """Smallest variable ``j`` with ``F |= X_i => X_j`` for every ``i``, if any."""
    hh = build_horn_hypergraph(f)
    common = (1 << hh.n_vars) - 1
    for row in _variable_reach_rows(hh):
        common &= row
    answer = (common & -common).bit_length() - 1 if common else None
    # every variable in the terminal class (the one holding t) qualifies
    for comp in terminal_components(hh.hypergraph):
        for v in comp.members:
            if v < hh.n_vars:
                assert (common >> v) & 1, f"variable {v + 1} in the sink class must qualify"
    return None if answer is None else answer + 1


def all_variables_equivalent(f: HornFormula) -> bool:
    """Whether ``F |= X_i <=> X_j`` for every pair of variables."""
    hh = build_horn_hypergraph(f)
    if is_strongly_connected(hh.hypergraph):
        return True
    full = (1 << hh.n_vars) - 1
    return all(row == full for row in _variable_reach_rows(hh))
