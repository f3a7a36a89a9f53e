"""Readers and writers for the three line-oriented text formats.

``.dhg``  ``vertices <n>`` then ``<tail ids> -> <head ids>`` per arc (0-based).
``.horn`` ``vars <n>`` then ``fact <i>``, ``imp <i1> .. <ip> -> <i>`` or
          ``goal <i1> .. <ip>`` (1-based).
``.fam``  ``domain <d>`` then ``set <e1> .. <ek>`` per set (0-based).

``#`` starts a comment; blank lines are ignored. Any malformed or invalid
content raises :class:`ParseError` carrying the offending line number.
"""

from __future__ import annotations

from collections.abc import Iterator

from .errors import HypergraphError, ParseError
from .horn import Clause, Fact, Goal, HornFormula, Implication
from .hypergraph import Hypergraph
from .setfamily import SetFamily


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield no, tokens


def _ints(tokens: list[str], line: int) -> list[int]:
    out = []
    for t in tokens:
        try:
            out.append(int(t))
        except ValueError:
            raise ParseError(f"expected an integer, got {t!r}", line) from None
    return out


def _header(lines: Iterator[tuple[int, list[str]]], keyword: str) -> int:
    first = next(lines, None)
    if first is None:
        raise ParseError(f"missing '{keyword} <n>' header")
    no, tokens = first
    if len(tokens) != 2 or tokens[0] != keyword:
        raise ParseError(f"expected '{keyword} <n>'", no)
    (n,) = _ints(tokens[1:], no)
    if n < 0:
        raise ParseError(f"{keyword} count must be non-negative", no)
    return n


def _split_arrow(tokens: list[str], line: int) -> tuple[list[str], list[str]]:
    if tokens.count("->") != 1:
        raise ParseError("expected exactly one '->'", line)
    k = tokens.index("->")
    return tokens[:k], tokens[k + 1 :]


def parse_dhg(text: str) -> Hypergraph:
    lines = _lines(text)
    h = Hypergraph(_header(lines, "vertices"))
    for no, tokens in lines:
        tail, head = _split_arrow(tokens, no)
        try:
            h.add_hyperarc(_ints(tail, no), _ints(head, no))
        except HypergraphError as e:
            raise ParseError(str(e), no) from None
    return h.freeze()


def format_dhg(h: Hypergraph) -> str:
    out = [f"vertices {h.vertex_count}"]
    out.extend(str(a) for a in h.arcs)
    return "\n".join(out) + "\n"


def parse_horn(text: str) -> HornFormula:
    lines = _lines(text)
    n = _header(lines, "vars")
    clauses: list[Clause] = []
    last = 1
    for no, tokens in lines:
        last = no
        kind, rest = tokens[0], tokens[1:]
        if kind == "fact":
            ids = _ints(rest, no)
            if len(ids) != 1:
                raise ParseError("'fact' takes exactly one variable", no)
            clauses.append(Fact(ids[0]))
        elif kind == "imp":
            premises, concl = _split_arrow(rest, no)
            ids = _ints(concl, no)
            if not premises or len(ids) != 1:
                raise ParseError("'imp' needs premises and exactly one conclusion", no)
            clauses.append(Implication(tuple(_ints(premises, no)), ids[0]))
        elif kind == "goal":
            if not rest:
                raise ParseError("'goal' needs at least one variable", no)
            clauses.append(Goal(tuple(_ints(rest, no))))
        else:
            raise ParseError(f"unknown clause kind {kind!r}", no)
        for v in _ints([t for t in rest if t != "->"], no):
            if not 1 <= v <= n:
                raise ParseError(f"variable {v} not in 1..{n}", no)
    try:
        return HornFormula(n, tuple(clauses))
    except HypergraphError as e:
        raise ParseError(str(e), last) from None


def format_horn(f: HornFormula) -> str:
    out = [f"vars {f.n_vars}"]
    for c in f.clauses:
        if isinstance(c, Implication):
            out.append(f"imp {' '.join(map(str, c.premises))} -> {c.conclusion}")
        elif isinstance(c, Fact):
            out.append(f"fact {c.var}")
        else:
            out.append(f"goal {' '.join(map(str, c.premises))}")
    return "\n".join(out) + "\n"


def parse_fam(text: str) -> SetFamily:
    lines = _lines(text)
    d = _header(lines, "domain")
    sets: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for no, tokens in lines:
        if tokens[0] != "set":
            raise ParseError(f"expected 'set', got {tokens[0]!r}", no)
        elems = _ints(tokens[1:], no)
        for x in elems:
            if not 0 <= x < d:
                raise ParseError(f"element {x} not in 0..{d - 1}", no)
        key = tuple(sorted(set(elems)))
        if key in seen:
            raise ParseError(f"duplicate of the set on line {seen[key]}", no)
        seen[key] = no
        sets.append(key)
    return SetFamily(d, tuple(sets))


def format_set(s: tuple[int, ...]) -> str:
    return " ".join(["set", *map(str, s)])


def format_fam(f: SetFamily) -> str:
    out = [f"domain {f.domain_size}"]
    out.extend(format_set(s) for s in f.sets)
    return "\n".join(out) + "\n"
