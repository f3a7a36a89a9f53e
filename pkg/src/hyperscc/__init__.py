"""Directed hypergraphs: reachability, terminal strongly connected components
and the reductions built on them (Horn entailment, minimal sets, transitive
reduction size)."""

from .errors import HypergraphError, ParseError
from .hypergraph import Digraph, Hyperarc, Hypergraph, graph_projection, image, new_hypergraph, size
from .reachability import ReachRelation, ReachSet, is_reachable, reachability_relation, reachable_set
from .terminal_scc import (
    Component,
    RunStats,
    TraversalState,
    all_sccs_bruteforce,
    has_sink,
    is_strongly_connected,
    tarjan_digraph_sccs,
    terminal_components,
    terminal_sccs,
    terminal_sccs_naive,
)
from .unionfind import UnionFind

__all__ = [
    "Component",
    "Digraph",
    "Hyperarc",
    "Hypergraph",
    "HypergraphError",
    "ParseError",
    "ReachRelation",
    "ReachSet",
    "RunStats",
    "TraversalState",
    "UnionFind",
    "all_sccs_bruteforce",
    "graph_projection",
    "has_sink",
    "image",
    "is_reachable",
    "is_strongly_connected",
    "new_hypergraph",
    "reachability_relation",
    "reachable_set",
    "size",
    "tarjan_digraph_sccs",
    "terminal_components",
    "terminal_sccs",
    "terminal_sccs_naive",
]
