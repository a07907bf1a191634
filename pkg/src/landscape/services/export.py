"""CSV and JSON renderings of campaign results."""

import csv
import io
import json
import math
from typing import Any, Dict, List, Optional, Sequence

from landscape.models import CampaignSummary, DistributionComparison, TheoryValues, TrialRecord


def csv_header(max_cycle_len: int) -> List[str]:
    """Column names: trial,satisfiable,m_clauses,Y,T,X2..Xm,comparable_pairs,log2_clusters."""
    cycle_columns = ["X%d" % length for length in range(2, max_cycle_len + 1)]
    return ["trial", "satisfiable", "m_clauses", "Y", "T"] + cycle_columns + ["comparable_pairs", "log2_clusters"]


def _format_log2(record: TrialRecord) -> str:
    value = record.log2_clusters
    if math.isinf(value):
        return "-inf"
    if value.is_integer():
        return "%d" % value
    return "%.6f" % value


def records_to_csv(records: Sequence[TrialRecord], max_cycle_len: int) -> str:
    """One row per trial, in the given order, with LF line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(csv_header(max_cycle_len))
    for record in records:
        cycle_counts = [record.X.get(length, 0) for length in range(2, max_cycle_len + 1)]
        row = [
            record.trial_index,
            int(record.satisfiable),
            record.m_clauses,
            record.Y,
            record.T,
            *cycle_counts,
            record.comparable_pairs,
            _format_log2(record),
        ]
        writer.writerow(row)
    return buffer.getvalue()


def _keyed(values: Dict[int, Any]) -> Dict[str, Any]:
    return {str(key): value for key, value in values.items()}


def theory_to_dict(theory: TheoryValues) -> Dict[str, Any]:
    """JSON-ready closed-form values; infinite means are written as null."""
    lambda_n: Optional[float] = theory.lambda_n if math.isfinite(theory.lambda_n) else None
    return {
        "n": theory.n,
        "c": theory.c,
        "p": theory.p,
        "max_cycle_len": theory.max_cycle_len,
        "lambda_inf": theory.lambda_inf,
        "lambda_n": lambda_n,
        "lambda_m_n": theory.lambda_m_n,
        "exp_minus_lambda_n": math.exp(-theory.lambda_n) if lambda_n is not None else None,
        "unique_cluster_prob": theory.unique_cluster_prob,
        "tail_bound": theory.tail_bound,
        "mu": _keyed(theory.mu),
        "mu_limit": _keyed(theory.mu_limit),
    }


def comparison_to_dict(comparison: DistributionComparison) -> Dict[str, Any]:
    return {
        "lambda": comparison.lam,
        "sample_size": comparison.sample_size,
        "bins": list(comparison.bins),
        "observed": list(comparison.observed),
        "expected": list(comparison.expected),
        "deviations": list(comparison.deviations),
        "chi_square": comparison.chi_square,
        "degrees_of_freedom": comparison.degrees_of_freedom,
        "p_value": comparison.p_value,
    }


def summary_to_dict(summary: CampaignSummary) -> Dict[str, Any]:
    """
    Campaign summary as plain JSON types.

    Args:
        summary: Aggregated campaign statistics

    Returns:
        Dictionary with string keys for every histogram
    """
    cfg = summary.config
    comparison = comparison_to_dict(summary.comparison) if summary.comparison is not None else None
    return {
        "config": {
            "n": cfg.n,
            "c": cfg.c,
            "p": cfg.p,
            "trials": cfg.trials,
            "seed": cfg.seed,
            "max_cycle_len": cfg.max_cycle_len,
        },
        "trials": summary.trials,
        "satisfiable_fraction": summary.satisfiable_fraction,
        "unsat_fraction": summary.unsat_fraction,
        "y_histogram": _keyed(summary.y_histogram),
        "cluster_histogram": _keyed(summary.cluster_histogram),
        "x_means": _keyed(summary.x_means),
        "x_standard_errors": _keyed(summary.x_standard_errors),
        "t_mean": summary.t_mean,
        "comparable_pairs_mean": summary.comparable_pairs_mean,
        "comparable_pairs_standard_error": summary.comparable_pairs_standard_error,
        "unique_cluster_fraction": summary.unique_cluster_fraction,
        "y_equals_t_checked_trials": summary.y_equals_t_checked_trials,
        "y_equals_t_violations": summary.y_equals_t_violations,
        "theory": theory_to_dict(summary.theory),
        "comparison": comparison,
    }


def to_json(payload: Dict[str, Any]) -> str:
    """Stable JSON text with a trailing newline."""
    return json.dumps(payload, indent=2) + "\n"
