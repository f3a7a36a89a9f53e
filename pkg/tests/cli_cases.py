"""Golden CLI invocations: name -> argv (paths relative to tests/data)."""

from __future__ import annotations

import io
from contextlib import redirect_stderr
from pathlib import Path

from hyperscc.cli import run

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

CASES: dict[str, list[str]] = {
    "sample_terminal_scc": ["terminal-scc", "sample.dhg"],
    "sample_terminal_scc_all_stats": ["terminal-scc", "sample.dhg", "--all-classes", "--stats"],
    "sample_reach_y": ["reach", "sample.dhg", "--from", "4"],
    "sample_reach_u": ["reach", "sample.dhg", "--from", "0"],
    "sample_sink": ["sink", "sample.dhg"],
    "sample_strongly_connected": ["strongly-connected", "sample.dhg"],
    "sample_trred_size": ["trred-size", "sample.dhg"],
    "sample_toposort": ["toposort", "sample.dhg"],
    "hidden_terminal_scc": ["terminal-scc", "hidden.dhg"],
    "hidden_terminal_scc_all": ["terminal-scc", "hidden.dhg", "--all-classes", "--stats"],
    "hidden_reach_w": ["reach", "hidden.dhg", "--from", "2"],
    "hidden_sink": ["sink", "hidden.dhg"],
    "hidden_strongly_connected": ["strongly-connected", "hidden.dhg"],
    "hidden_trred_size": ["trred-size", "hidden.dhg"],
    "cycle3_sink": ["sink", "cycle3.dhg"],
    "chain_toposort": ["toposort", "chain.dhg"],
    "sets_terminal_scc": ["terminal-scc", "three_sets.dhg", "--all-classes"],
    "sets_reach_s1": ["reach", "three_sets.dhg", "--from", "0"],
    "sets_trred_size": ["trred-size", "three_sets.dhg"],
    "sets_toposort": ["toposort", "three_sets.dhg"],
    "sets_minsets": ["minsets", "three_sets.fam"],
    "sets_sperner": ["sperner", "three_sets.fam"],
    "sets_linext": ["linext", "three_sets.fam"],
    "minimal_terminal_scc": ["terminal-scc", "three_sets_minimal.dhg", "--stats"],
    "minimal_reach_s1": ["reach", "three_sets_minimal.dhg", "--from", "0"],
    "minimal_reach_s3": ["reach", "three_sets_minimal.dhg", "--from", "2"],
    "minimal_sink": ["sink", "three_sets_minimal.dhg"],
    "horn_entails": ["horn", "entails", "chain.horn", "--from", "1", "--to", "3"],
    "horn_entails_back": ["horn", "entails", "chain.horn", "--from", "3", "--to", "1"],
    "horn_vacuous": ["horn", "entails", "vacuous.horn", "--from", "1", "--to", "3"],
    "horn_implied_by_all": ["horn", "implied-by-all", "chain.horn"],
    "horn_all_equivalent": ["horn", "all-equivalent", "equiv.horn"],
    "horn_not_all_equivalent": ["horn", "all-equivalent", "chain.horn"],
    "growth": ["growth", "--n", "4,8,12"],
    "gen_lower_bound_fam": ["gen", "lower-bound", "--n", "8"],
    "gen_lower_bound_dhg": ["gen", "lower-bound", "--n", "4", "--emit", "dhg"],
}

FILE_SUFFIXES = (".dhg", ".fam", ".horn")


def resolve(argv: list[str]) -> list[str]:
    return [str(DATA / a) if a.endswith(FILE_SUFFIXES) else a for a in argv]


def invoke(argv: list[str]) -> tuple[int, str, str]:
    out: list[str] = []
    err = io.StringIO()
    with redirect_stderr(err):
        code = run(resolve(argv), out=out.append, err=lambda s: print(s, file=err))
    text = "".join(line + "\n" for line in out)
    return code, text, err.getvalue()


def golden_text(name: str) -> str:
    code, out, err = invoke(CASES[name])
    return f"$ hyperscc {' '.join(CASES[name])}\n[exit {code}]\n{out}{err}"


def regenerate() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for name in CASES:
        (GOLDEN / f"{name}.txt").write_text(golden_text(name))


if __name__ == "__main__":
    regenerate()
