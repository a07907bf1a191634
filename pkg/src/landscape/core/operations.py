"""Core operations behind the landscape subcommands."""

import logging
import math
import os
from typing import Any, Dict, Optional

from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn

from landscape.config import config
from landscape.constants import (
    DEFAULT_VERIFY_PAIRS,
    ENV_CHUNK_SIZE,
    ENV_LOG_LEVEL,
    ENV_MAX_CYCLE_LEN,
    ENV_ORACLE_CAP,
    ENV_THREADS,
    EXIT_MISMATCH,
    EXIT_OK,
    EXT_CSV,
    EXT_JSON,
    NOT_CONNECTED_TEXT,
)
from landscape.core.clusters import ClusterAnalyzer
from landscape.core.components import satisfying_assignment
from landscape.core.ensemble import run_campaign, validate_config
from landscape.core.parser import FORMAT_AUTO, load_formula
from landscape.core.theory import theory_values
from landscape.core.verification import run_verification
from landscape.exceptions import DimensionError
from landscape.models import ClusterReport, EnsembleConfig, Genotype
from landscape.services.export import records_to_csv, summary_to_dict, theory_to_dict, to_json
from landscape.services.svg import render_histogram_svg
from landscape.ui.components import UIComponents
from landscape.utils import write_text_file

logger = logging.getLogger(__name__)

OUTPUT_JSON = "json"
OUTPUT_TABLE = "table"
OUTPUT_CSV = "csv"
OUTPUT_BOTH = "both"


def report_to_dict(report: ClusterReport, witness: Optional[Genotype]) -> Dict[str, Any]:
    """JSON form of a cluster report; the cluster count is a decimal string."""
    pairs = []
    for pair in report.splitting_pairs:
        pair_entry = {
            "component": [str(literal) for literal in pair.literals],
            "complement": [str(literal) for literal in pair.complement_literals()],
            "loci": [locus + 1 for locus in sorted(pair.loci)],
        }
        pairs.append(pair_entry)

    return {
        "n": report.n,
        "m": report.clause_count,
        "satisfiable": report.satisfiable,
        "component_sizes": list(report.component_sizes),
        "splitting_pairs": pairs,
        "k": report.k,
        "clusters": str(report.cluster_count),
        "witness": str(witness) if witness is not None else None,
    }


class Operations:
    """Runs each subcommand; machine output goes to stdout, everything else to the consoles."""

    def __init__(self, console: Console, error_console: Optional[Console] = None):
        self.console = console
        self.error_console = error_console or Console(stderr=True)
        self.ui = UIComponents(console)

    def _emit(self, text: str) -> None:
        print(text, end="")

    def _progress(self, quiet: bool) -> Progress:
        return Progress(
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=self.error_console,
            disable=quiet,
        )

    def analyze(self, file_path: str, output_format: str = OUTPUT_JSON, input_format: str = FORMAT_AUTO) -> int:
        """Print the cluster structure of a formula file."""
        formula = load_formula(file_path, input_format)
        analyzer = ClusterAnalyzer(formula)
        report = analyzer.report()
        witness = satisfying_assignment(analyzer.decomposition) if report.satisfiable else None

        if output_format == OUTPUT_TABLE:
            report_table = self.ui.show_cluster_report(report, os.path.basename(file_path))
            self.console.print(report_table)
        else:
            self._emit(to_json(report_to_dict(report, witness)))
        return EXIT_OK

    def simulate(
        self,
        cfg: EnsembleConfig,
        out_prefix: Optional[str] = None,
        output_format: str = OUTPUT_BOTH,
        svg_path: Optional[str] = None,
        quiet: bool = False,
        threads: Optional[int] = None,
    ) -> int:
        """
        Run a campaign and write its records and summary.

        Args:
            cfg: Campaign parameters
            out_prefix: Files are written to PREFIX.csv and/or PREFIX.json; without it
                the JSON summary goes to stdout
            output_format: "csv", "json" or "both"
            svg_path: Optional SVG histogram of Y
            quiet: Hide the progress bar and the summary table
            threads: Worker cap override

        Returns:
            Exit code
        """
        validate_config(cfg)

        with self._progress(quiet) as progress:
            task = progress.add_task("Simulating", total=cfg.trials)

            def advance(completed: int) -> None:
                progress.update(task, advance=completed)

            records, summary = run_campaign(cfg, threads=threads, progress_callback=advance)

        summary_json = to_json(summary_to_dict(summary))
        if out_prefix:
            if output_format in (OUTPUT_CSV, OUTPUT_BOTH):
                csv_path = out_prefix + EXT_CSV
                write_text_file(csv_path, records_to_csv(records, cfg.max_cycle_len))
                logger.info("wrote %s", csv_path)
            if output_format in (OUTPUT_JSON, OUTPUT_BOTH):
                json_path = out_prefix + EXT_JSON
                write_text_file(json_path, summary_json)
                logger.info("wrote %s", json_path)
        else:
            self._emit(summary_json)

        if svg_path:
            title = "n=%d c=%g trials=%d" % (cfg.n, cfg.c, cfg.trials)
            lambda_n = summary.theory.lambda_n
            overlay = lambda_n if math.isfinite(lambda_n) else None
            write_text_file(svg_path, render_histogram_svg(summary.y_histogram, overlay, title))
            logger.info("wrote %s", svg_path)

        if not quiet:
            summary_table = self.ui.show_campaign_summary(summary)
            self.error_console.print(summary_table)
        return EXIT_OK

    def verify(
        self,
        n_max: int,
        cases: int,
        c_list: list,
        seed: int,
        pairs: int = DEFAULT_VERIFY_PAIRS,
        quiet: bool = False,
    ) -> int:
        """Run the oracle sweep; prints "<ok>/<cases> ok" and a reproducer per failure."""
        with self._progress(quiet) as progress:
            task = progress.add_task("Verifying", total=cases)

            def advance(completed: int) -> None:
                progress.update(task, advance=completed)

            report = run_verification(n_max, cases, c_list, seed, pairs, progress_callback=advance)

        self._emit("%d/%d ok\n" % (report.passed, report.cases))
        for failure in report.failures:
            header = "# case %d (n=%d, c=%g): %s\n" % (failure.case_index, failure.n, failure.c, failure.reason)
            self._emit(header + failure.formula_text)

        if not quiet:
            results_table = self.ui.show_verification_results(report)
            self.error_console.print(results_table)
        return EXIT_OK if report.ok else EXIT_MISMATCH

    def path(self, file_path: str, u_text: str, v_text: str, input_format: str = FORMAT_AUTO) -> int:
        """Print a mutational path from u to v one genotype per line, or "not connected"."""
        formula = load_formula(file_path, input_format)
        u = Genotype.parse(u_text)
        v = Genotype.parse(v_text)
        for genotype in (u, v):
            if genotype.n != formula.n:
                error_message = "Genotype %s has %d loci but the formula has %d" % (genotype, genotype.n, formula.n)
                raise DimensionError(error_message, formula.n, genotype.n)

        path = ClusterAnalyzer(formula).find_path(u, v)
        if path is None:
            self._emit(NOT_CONNECTED_TEXT + "\n")
        else:
            lines = "".join("%s\n" % genotype for genotype in path)
            self._emit(lines)
        return EXIT_OK

    def theory(self, n: int, c: float, max_cycle_len: int, output_format: str = OUTPUT_JSON) -> int:
        """Print the closed-form values."""
        values = theory_values(n, c, max_cycle_len)
        if output_format == OUTPUT_TABLE:
            self.console.print(self.ui.show_theory_table(values))
        else:
            self._emit(to_json(theory_to_dict(values)))
        return EXIT_OK

    def show_environment(self) -> int:
        """Display the configuration variables and the values in effect."""
        effective = {
            ENV_THREADS: str(config.get_threads()),
            ENV_ORACLE_CAP: str(config.get_oracle_cap()),
            ENV_MAX_CYCLE_LEN: str(config.get_max_cycle_len()),
            ENV_CHUNK_SIZE: str(config.get_chunk_size()),
            ENV_LOG_LEVEL: config.get_log_level(),
        }
        env_table = self.ui.show_environment_table(config.describe(), effective)
        self.console.print(env_table)
        if not config.config_file_loaded:
            self.console.print("[dim]No config file loaded; using process environment only.[/]")
        return EXIT_OK
