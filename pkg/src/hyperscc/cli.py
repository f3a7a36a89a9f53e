"""Command-line front end.

Exit status is 0 on success, 1 when a query fails for a domain reason (for
example an out-of-range vertex or a cyclic input to ``toposort``) and 2 on
usage errors or malformed input files.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from .errors import HypergraphError, ParseError, VertexOutOfRange
from .formats import format_dhg, format_fam, format_set, parse_dhg, parse_fam, parse_horn
from .horn import all_variables_equivalent, entails_implication, variable_implied_by_all
from .reachability import reachable_set
from .setfamily import (
    build_subset_hypergraph,
    is_sperner,
    linear_extension,
    lower_bound_family,
    minimal_sets,
)
from .terminal_scc import has_sink, is_strongly_connected, terminal_sccs
from .transitive_reduction import (
    GROWTH_HEADER,
    growth_experiment,
    topological_sort,
    transitive_reduction_size,
)

Out = Callable[[str], None]


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_terminal_scc(args: argparse.Namespace, out: Out) -> None:
    comps, stats = terminal_sccs(parse_dhg(_read(args.file)))
    for c in comps:
        if c.terminal or args.all_classes:
            out(str(c))
    if args.stats:
        for line in stats.lines():
            out(line)


def cmd_reach(args: argparse.Namespace, out: Out) -> None:
    h = parse_dhg(_read(args.file))
    out(" ".join(map(str, reachable_set(h, args.source).sorted())))


def cmd_sink(args: argparse.Namespace, out: Out) -> None:
    out(_yes(has_sink(parse_dhg(_read(args.file)))))


def cmd_strongly_connected(args: argparse.Namespace, out: Out) -> None:
    out(_yes(is_strongly_connected(parse_dhg(_read(args.file)))))


def cmd_trred_size(args: argparse.Namespace, out: Out) -> None:
    out(str(transitive_reduction_size(parse_dhg(_read(args.file)))))


def cmd_toposort(args: argparse.Namespace, out: Out) -> None:
    out(" ".join(map(str, topological_sort(parse_dhg(_read(args.file))))))


def cmd_growth(args: argparse.Namespace, out: Out) -> None:
    rows = growth_experiment(args.n)
    out(GROWTH_HEADER)
    for r in rows:
        out(r.tsv())


def cmd_horn_entails(args: argparse.Namespace, out: Out) -> None:
    f = parse_horn(_read(args.file))
    for v in (args.source, args.target):
        if not 1 <= v <= f.n_vars:
            raise VertexOutOfRange(f"variable {v} not in 1..{f.n_vars}")
    out(_yes(entails_implication(f, args.source, args.target)))


def cmd_horn_implied_by_all(args: argparse.Namespace, out: Out) -> None:
    j = variable_implied_by_all(parse_horn(_read(args.file)))
    out("none" if j is None else str(j))


def cmd_horn_all_equivalent(args: argparse.Namespace, out: Out) -> None:
    out(_yes(all_variables_equivalent(parse_horn(_read(args.file)))))


def cmd_minsets(args: argparse.Namespace, out: Out) -> None:
    f = parse_fam(_read(args.file))
    for k in minimal_sets(f):
        out(format_set(f.sets[k]))


def cmd_sperner(args: argparse.Namespace, out: Out) -> None:
    out(_yes(is_sperner(parse_fam(_read(args.file)))))


def cmd_linext(args: argparse.Namespace, out: Out) -> None:
    out(" ".join(map(str, linear_extension(parse_fam(_read(args.file))))))


def cmd_gen_lower_bound(args: argparse.Namespace, out: Out) -> None:
    fam = lower_bound_family(args.n)
    text = format_fam(fam) if args.emit == "fam" else format_dhg(build_subset_hypergraph(fam).hypergraph)
    out(text.rstrip("\n"))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hyperscc", description="Terminal SCCs and related queries on directed hypergraphs."
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, func: Callable, help: str, parent=sub) -> argparse.ArgumentParser:
        sp = parent.add_parser(name, help=help, description=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("terminal-scc", cmd_terminal_scc, "print the terminal SCCs of a .dhg file")
    sp.add_argument("file")
    sp.add_argument("--all-classes", action="store_true", help="also print leftover classes")
    sp.add_argument("--stats", action="store_true", help="append operation counters")

    sp = add("reach", cmd_reach, "vertices reachable from a vertex")
    sp.add_argument("file")
    sp.add_argument("--from", dest="source", type=int, required=True)

    for name, func, text in (
        ("sink", cmd_sink, "is some vertex reachable from all vertices"),
        ("strongly-connected", cmd_strongly_connected, "is the hypergraph strongly connected"),
        ("trred-size", cmd_trred_size, "size of the transitive reduction of reachability"),
        ("toposort", cmd_toposort, "topological order of an acyclic hypergraph"),
    ):
        add(name, func, text).add_argument("file")

    sp = add("growth", cmd_growth, "reduction size growth on the lower-bound families")
    sp.add_argument("--n", type=_int_list, required=True, help="comma-separated list, e.g. 4,8,12")

    horn = add("horn", None, "Horn formula queries on a .horn file")
    hsub = horn.add_subparsers(dest="horn_command", required=True, metavar="QUERY")
    sp = add("entails", cmd_horn_entails, "does X_i imply X_j", hsub)
    sp.add_argument("file")
    sp.add_argument("--from", dest="source", type=int, required=True)
    sp.add_argument("--to", dest="target", type=int, required=True)
    add("implied-by-all", cmd_horn_implied_by_all, "a variable implied by every variable", hsub).add_argument("file")
    add("all-equivalent", cmd_horn_all_equivalent, "are all variables equivalent", hsub).add_argument("file")

    for name, func, text in (
        ("minsets", cmd_minsets, "inclusion-minimal sets of a .fam file"),
        ("sperner", cmd_sperner, "is no set contained in another"),
        ("linext", cmd_linext, "set indices in an order compatible with inclusion"),
    ):
        add(name, func, text).add_argument("file")

    gen = add("gen", None, "generate inputs")
    gsub = gen.add_subparsers(dest="gen_command", required=True, metavar="KIND")
    sp = add("lower-bound", cmd_gen_lower_bound, "the lower-bound set family for n", gsub)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--emit", choices=("fam", "dhg"), default="fam")
    return p


def run(argv: Sequence[str], out: Out = print, err: Out | None = None) -> int:
    if err is None:
        err = lambda s: print(s, file=sys.stderr)  # noqa: E731
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return int(e.code or 0)
    try:
        args.func(args, out)
    except ParseError as e:
        err(f"hyperscc: {args.file if hasattr(args, 'file') else 'input'}: {e}")
        return 2
    except HypergraphError as e:
        err(f"hyperscc: error: {e}")
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
