"""Core package for the landscape package."""

from .clusters import (
    ClusterAnalyzer,
    cluster_report,
    count_clusters,
    count_comparable_pairs,
    find_path,
    same_cluster,
    splitting_pairs,
)
from .components import comparable, is_satisfiable, satisfying_assignment, scc
from .digraph import build_digraph, reach_set
from .ensemble import cycle_census, run_campaign, sample_formula, summarize_campaign
from .formula import build_formula, is_viable, make_incompatibility, negate, violated_incompatibility
from .oracle import enumerate_viable, oracle_connected
from .parser import FormulaParser, load_formula, parse_dimacs, parse_native, render_dimacs, render_native
from .theory import compare_distributions, poisson_pmf, theory_values
from .verification import run_verification
from .operations import Operations

__all__ = [
    "negate",
    "make_incompatibility",
    "build_formula",
    "violated_incompatibility",
    "is_viable",
    "build_digraph",
    "reach_set",
    "scc",
    "is_satisfiable",
    "comparable",
    "satisfying_assignment",
    "splitting_pairs",
    "count_comparable_pairs",
    "count_clusters",
    "cluster_report",
    "same_cluster",
    "find_path",
    "ClusterAnalyzer",
    "enumerate_viable",
    "oracle_connected",
    "sample_formula",
    "cycle_census",
    "run_campaign",
    "summarize_campaign",
    "theory_values",
    "poisson_pmf",
    "compare_distributions",
    "FormulaParser",
    "parse_dimacs",
    "render_dimacs",
    "parse_native",
    "render_native",
    "load_formula",
    "run_verification",
    "Operations",
]
