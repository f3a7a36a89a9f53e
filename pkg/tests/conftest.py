from __future__ import annotations

import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from hyperscc.horn import Fact, Goal, HornFormula, Implication
from hyperscc.hypergraph import Hypergraph
from hyperscc.setfamily import SetFamily

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

# vertex names u v w x y t
U, V, W, X, Y, T = range(6)
SAMPLE_ARCS = [([U], [V]), ([V], [W]), ([W], [U]), ([V, W], [X, Y]), ([W, Y], [T])]
# a non-terminal SCC {u, v} that the traversal does not discover; u v w
HIDDEN_ARCS = [([0], [2]), ([1], [0]), ([0, 2], [1])]
THREE_SETS = [[0, 1, 3], [0, 1, 2], [0, 1]]


def sample() -> Hypergraph:
    return Hypergraph.from_arcs(6, SAMPLE_ARCS)


def hidden() -> Hypergraph:
    return Hypergraph.from_arcs(3, HIDDEN_ARCS)


def three_sets() -> SetFamily:
    return SetFamily.of(4, THREE_SETS)


@pytest.fixture
def sample_h() -> Hypergraph:
    return sample()


@pytest.fixture
def hidden_h() -> Hypergraph:
    return hidden()


# -- seeded generators (acceptance runs) ---------------------------------


def random_hypergraph(
    rng: random.Random, max_vertices: int = 12, max_arcs: int = 20, max_side: int = 4
) -> Hypergraph:
    """Alternates between dense arcs and sparse, mostly simple ones.

    The sparse shape matters: it produces long simple paths into cycles,
    which is where representative bookkeeping mistakes show up.
    """
    n = rng.randint(1, max_vertices)
    h = Hypergraph(n)
    sparse = rng.random() < 0.5
    for _ in range(rng.randint(0, max_arcs)):
        if sparse:
            k = 1 if rng.random() < 0.7 else rng.randint(2, max_side)
            t = rng.sample(range(n), min(k, n))
            hd = rng.sample(range(n), min(rng.randint(1, 2), n))
        else:
            t = rng.sample(range(n), rng.randint(1, min(max_side, n)))
            hd = rng.sample(range(n), rng.randint(1, min(max_side, n)))
        h.add_hyperarc(t, hd)
    return h


def random_digraph_hypergraph(rng: random.Random, max_vertices: int = 12) -> Hypergraph:
    n = rng.randint(1, max_vertices)
    h = Hypergraph(n)
    for _ in range(rng.randint(0, 2 * n)):
        h.add_hyperarc([rng.randrange(n)], [rng.randrange(n)])
    return h


def random_family(rng: random.Random, max_domain: int = 8, max_sets: int = 12) -> SetFamily:
    d = rng.randint(1, max_domain)
    want = rng.randint(1, max_sets)
    sets: set[tuple[int, ...]] = set()
    for _ in range(4 * want):
        if len(sets) == want:
            break
        k = rng.randint(0, d)
        sets.add(tuple(sorted(rng.sample(range(d), k))))
    return SetFamily(d, tuple(sorted(sets, key=lambda s: (rng.random(), s))))


def random_horn(rng: random.Random, max_vars: int = 10) -> HornFormula:
    n = rng.randint(1, max_vars)
    clauses = []
    for _ in range(rng.randint(1, 2 * n)):
        kind = rng.random()
        if kind < 0.15:
            clauses.append(Fact(rng.randint(1, n)))
        elif kind < 0.3:
            clauses.append(Goal(tuple(rng.sample(range(1, n + 1), rng.randint(1, min(3, n))))))
        else:
            prem = tuple(rng.sample(range(1, n + 1), rng.randint(1, min(3, n))))
            clauses.append(Implication(prem, rng.randint(1, n)))
    used = {v for c in clauses for v in _clause_vars(c)}
    # every variable must occur somewhere
    clauses.extend(Implication((v,), v) for v in range(1, n + 1) if v not in used)
    return HornFormula(n, tuple(clauses))


def _clause_vars(c) -> tuple[int, ...]:
    if isinstance(c, Implication):
        return (*c.premises, c.conclusion)
    if isinstance(c, Fact):
        return (c.var,)
    return c.premises


# -- hypothesis strategies -----------------------------------------------


@st.composite
def hypergraphs(draw, max_vertices: int = 10, max_arcs: int = 16, max_side: int = 4, simple: bool = False):
    n = draw(st.integers(1, max_vertices))
    vs = st.integers(0, n - 1)
    side = st.lists(vs, min_size=1, max_size=1 if simple else max_side)
    arcs = draw(st.lists(st.tuples(side, side), max_size=max_arcs))
    return Hypergraph.from_arcs(n, arcs)


@st.composite
def set_families(draw, max_domain: int = 8, max_sets: int = 12):
    d = draw(st.integers(1, max_domain))
    sets = draw(
        st.lists(
            st.frozensets(st.integers(0, d - 1)), min_size=1, max_size=max_sets, unique=True
        )
    )
    return SetFamily.of(d, (sorted(s) for s in sets))


@st.composite
def horn_formulas(draw, max_vars: int = 8):
    n = draw(st.integers(1, max_vars))
    var = st.integers(1, n)
    prem = st.lists(var, min_size=1, max_size=3, unique=True).map(tuple)
    clause = st.one_of(
        st.builds(Implication, prem, var), st.builds(Fact, var), st.builds(Goal, prem)
    )
    clauses = draw(st.lists(clause, min_size=1, max_size=2 * n))
    used = {v for c in clauses for v in _clause_vars(c)}
    clauses += [Fact(v) if draw(st.booleans()) else Implication((v,), v) for v in range(1, n + 1) if v not in used]
    return HornFormula(n, tuple(clauses))


# -- acceptance summary --------------------------------------------------

ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
