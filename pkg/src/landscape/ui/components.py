"""UI components for the landscape command-line interface."""

import math
from typing import Dict, Optional

from rich.console import Console
from rich.table import Table

from landscape.models import CampaignSummary, ClusterReport, TheoryValues, VerificationReport


def _format_optional(value: Optional[float], pattern: str = "%.6f") -> str:
    if value is None or not math.isfinite(value):
        return "n/a"
    return pattern % value


class UIComponents:
    """Reusable rich tables."""

    def __init__(self, console: Console):
        self.console = console

    def show_cluster_report(self, report: ClusterReport, source: str = "") -> Table:
        """Create a table summarising a cluster report."""
        title_text = "Cluster Structure" if not source else "Cluster Structure: %s" % source
        table = Table(title=title_text)
        table.add_column("Property", style="cyan", width=25)
        table.add_column("Value", style="green", width=40)

        table.add_row("Loci", str(report.n))
        table.add_row("Incompatibilities", str(report.clause_count))
        satisfiable_text = "Yes" if report.satisfiable else "[red]No[/]"
        table.add_row("Satisfiable", satisfiable_text)
        sizes = ", ".join(str(size) for size in report.component_sizes) or "-"
        table.add_row("Nontrivial Components", sizes)
        table.add_row("Splitting Pairs (k)", str(report.k))
        table.add_row("Clusters", str(report.cluster_count))

        for index, pair in enumerate(report.splitting_pairs, 1):
            side = ", ".join(str(literal) for literal in pair.literals)
            other = ", ".join(str(literal) for literal in pair.complement_literals())
            label = "Pair %d" % index
            table.add_row(label, "{%s} | {%s}" % (side, other))

        return table

    def show_campaign_summary(self, summary: CampaignSummary) -> Table:
        """Create a table comparing campaign statistics with their predictions."""
        cfg = summary.config
        title_text = "Campaign n=%d c=%g (%d trials)" % (cfg.n, cfg.c, summary.trials)
        table = Table(title=title_text)
        table.add_column("Quantity", style="cyan", width=28)
        table.add_column("Observed", style="green", justify="right", width=14)
        table.add_column("Predicted", style="yellow", justify="right", width=14)

        theory = summary.theory
        table.add_row("Satisfiable fraction", "%.4f" % summary.satisfiable_fraction, "")
        table.add_row("Unsatisfiable fraction", "%.4f" % summary.unsat_fraction, "")

        zero_fraction = summary.y_histogram.get(0, 0) / summary.trials
        table.add_row("P(Y = 0)", "%.4f" % zero_fraction, _format_optional(math.exp(-theory.lambda_n), "%.4f"))
        table.add_row(
            "P(one cluster | sat)",
            _format_optional(summary.unique_cluster_fraction, "%.4f"),
            _format_optional(theory.unique_cluster_prob, "%.4f"),
        )

        for length, mean in summary.x_means.items():
            label = "Mean X%d" % length
            observed = "%.4f ± %.4f" % (mean, summary.x_standard_errors[length])
            table.add_row(label, observed, "%.4f" % theory.mu[length])

        table.add_row("Mean T", "%.4f" % summary.t_mean, "%.4f" % theory.lambda_m_n)
        table.add_row(
            "Mean comparable pairs",
            "%.4f ± %.4f" % (summary.comparable_pairs_mean, summary.comparable_pairs_standard_error),
            "",
        )
        table.add_row("Y = T checks", "%d" % summary.y_equals_t_checked_trials, "")
        violations_text = str(summary.y_equals_t_violations)
        if summary.y_equals_t_violations:
            violations_text = "[red]%s[/]" % violations_text
        table.add_row("Y != T violations", violations_text, "0")

        comparison = summary.comparison
        if comparison is not None:
            table.add_row("Chi-square (dof)", "%.3f (%d)" % (comparison.chi_square, comparison.degrees_of_freedom), "")
            table.add_row("p-value", _format_optional(comparison.p_value, "%.4f"), "")

        return table

    def show_theory_table(self, theory: TheoryValues) -> Table:
        """Create a table of the closed-form values."""
        title_text = "Theory n=%d c=%g" % (theory.n, theory.c)
        table = Table(title=title_text)
        table.add_column("Quantity", style="cyan", width=28)
        table.add_column("Value", style="green", justify="right", width=16)

        table.add_row("p", "%.6g" % theory.p)
        table.add_row("lambda (limit)", _format_optional(theory.lambda_inf))
        table.add_row("lambda_n", _format_optional(theory.lambda_n))
        table.add_row("lambda_n up to length %d" % theory.max_cycle_len, _format_optional(theory.lambda_m_n))
        table.add_row("P(one cluster) limit", _format_optional(theory.unique_cluster_prob))
        table.add_row("Longer-cycle tail bound", _format_optional(theory.tail_bound))
        for length, mean in theory.mu.items():
            table.add_row("mu_%d" % length, "%.6f" % mean)

        return table

    def show_verification_results(self, report: VerificationReport) -> Table:
        """Create a table showing verification results."""
        title_text = "Verification (%d/%d ok)" % (report.passed, report.cases)
        table = Table(title=title_text)
        table.add_column("Property", style="cyan", width=25)
        table.add_column("Value", style="green", width=40)

        table.add_row("Cases", str(report.cases))
        table.add_row("Passed", str(report.passed))
        table.add_row("Pair Checks", str(report.pair_checks))
        table.add_row("Path Checks", str(report.path_checks))
        for failure in report.failures:
            label = "[red]Case %d[/]" % failure.case_index
            detail = "n=%d c=%g: %s" % (failure.n, failure.c, failure.reason)
            table.add_row(label, detail)

        return table

    def show_environment_table(self, values: Dict[str, str], effective: Dict[str, str]) -> Table:
        """Create a table of the configuration variables."""
        table = Table(title="Environment Variables")
        table.add_column("Variable", style="cyan", width=28)
        table.add_column("Set To", style="green", width=16)
        table.add_column("Effective", style="yellow", width=16)

        for key, raw_value in values.items():
            shown = raw_value if raw_value else "[dim]unset[/]"
            table.add_row(key, shown, effective.get(key, ""))

        return table
