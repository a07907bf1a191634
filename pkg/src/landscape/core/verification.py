"""Sweeps that check the splitting-pair analysis against brute-force enumeration."""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from landscape.config import config
from landscape.constants import DEFAULT_VERIFY_PAIRS
from landscape.core.clusters import ClusterAnalyzer
from landscape.core.ensemble import sample_formula, trial_rng
from landscape.core.formula import is_viable
from landscape.core.oracle import enumerate_viable, oracle_connected
from landscape.core.parser import render_native
from landscape.exceptions import LandscapeError, ParameterError
from landscape.models import Formula, Genotype, VerificationFailure, VerificationReport, ViableSubgraph

logger = logging.getLogger(__name__)


def check_path(path: Sequence[Genotype], u: Genotype, v: Genotype, formula: Formula) -> Optional[str]:
    """Reason the path is invalid, or None when it is a viable single-step walk from u to v."""
    if not path:
        return "empty path"
    if path[0] != u or path[-1] != v:
        return "path runs from %s to %s instead of %s to %s" % (path[0], path[-1], u, v)
    for step, genotype in enumerate(path):
        if not is_viable(genotype, formula):
            return "path step %d (%s) is inviable" % (step, genotype)
        if step and path[step - 1].hamming(genotype) != 1:
            return "path steps %s -> %s differ at more than one locus" % (path[step - 1], genotype)
    return None


class CaseChecker:
    """Compares one formula's analysis with the oracle; counts the checks it makes."""

    def __init__(self, formula: Formula, pairs: int = DEFAULT_VERIFY_PAIRS):
        self.formula = formula
        self.pairs = pairs
        self.pair_checks = 0
        self.path_checks = 0

    def _check_witnesses(self, analyzer: ClusterAnalyzer) -> Optional[str]:
        for pair in analyzer.pairs:
            for side in (0, 1):
                witness = analyzer.strategy_witness(pair, side)
                literals = pair.literals if side == 0 else pair.complement_literals()
                if not all(witness.has(literal) for literal in literals):
                    return "strategy witness %s misses alleles of its component" % witness
        return None

    def _sample_pairs(self, subgraph: ViableSubgraph, rng: np.random.Generator) -> List[Tuple[Genotype, Genotype]]:
        codes = subgraph.viable_codes()
        if len(codes) == 0 or self.pairs <= 0:
            return []
        picks = rng.integers(0, len(codes), size=(self.pairs, 2))
        sampled = []
        for first, second in picks.tolist():
            u = Genotype(subgraph.n, int(codes[first]))
            v = Genotype(subgraph.n, int(codes[second]))
            sampled.append((u, v))
        return sampled

    def check(self, rng: np.random.Generator, cap: Optional[int] = None) -> Optional[str]:
        """
        Run every comparison on the formula.

        Args:
            rng: Source for the sampled genotype pairs
            cap: Oracle cap override

        Returns:
            Description of the first disagreement, or None when all checks pass
        """
        analyzer = ClusterAnalyzer(self.formula)
        report = analyzer.report()
        subgraph = enumerate_viable(self.formula, cap)

        if report.satisfiable != (subgraph.viable_count > 0):
            viable_count = subgraph.viable_count
            return "satisfiable=%s but the oracle found %d viable genotypes" % (report.satisfiable, viable_count)
        if report.cluster_count != subgraph.component_count:
            return "cluster count %d but the oracle found %d components" % (
                report.cluster_count,
                subgraph.component_count,
            )

        if report.satisfiable:
            reason = self._check_witnesses(analyzer)
            if reason:
                return reason

        for u, v in self._sample_pairs(subgraph, rng):
            self.pair_checks += 1
            connected = analyzer.same_cluster(u, v)
            expected = oracle_connected(subgraph, u, v)
            if connected != expected:
                return "same_cluster(%s, %s) = %s but the oracle says %s" % (u, v, connected, expected)

            path = analyzer.find_path(u, v)
            self.path_checks += 1
            if path is None:
                if expected:
                    return "no path returned between connected %s and %s" % (u, v)
                continue
            reason = check_path(path, u, v, self.formula)
            if reason:
                return reason

        return None


def run_verification(
    n_max: int,
    cases: int,
    c_list: Sequence[float],
    seed: int,
    pairs: int = DEFAULT_VERIFY_PAIRS,
    progress_callback: Optional[Callable[[int], None]] = None,
) -> VerificationReport:
    """
    Draw random formulas and compare the analysis with the oracle on each.

    Case k uses c = c_list[k mod len(c_list)] and n uniform in [2, n_max],
    both drawn from the case's own generator.

    Args:
        n_max: Largest number of loci; must not exceed the oracle cap
        cases: Number of random formulas
        c_list: Ensemble constants cycled over the cases
        seed: Base seed
        pairs: Genotype pairs sampled per case
        progress_callback: Called with 1 after each case

    Returns:
        VerificationReport with a native-format reproducer for each failure
    """
    cap = config.get_oracle_cap()
    if n_max < 2:
        raise ParameterError("n-max must be at least 2, got %d" % n_max, "n_max")
    if n_max > cap:
        raise ParameterError("n-max %d exceeds the oracle cap of %d" % (n_max, cap), "n_max")
    if cases < 0:
        raise ParameterError("cases must be non-negative, got %d" % cases, "cases")
    if not c_list:
        raise ParameterError("c-list must name at least one value", "c_list")
    for c in c_list:
        if not 0 <= c <= 4:
            raise ParameterError("c must lie in [0, 4] so that p <= 1 at n = 2, got %g" % c, "c_list")
    if seed < 0:
        raise ParameterError("seed must be non-negative, got %d" % seed, "seed")

    report = VerificationReport(cases=cases, passed=0)
    for case_index in range(cases):
        rng = trial_rng(seed, case_index)
        n = int(rng.integers(2, n_max + 1))
        c = c_list[case_index % len(c_list)]
        formula = sample_formula(n, c, rng)

        checker = CaseChecker(formula, pairs)
        try:
            reason = checker.check(rng, cap)
        except LandscapeError as e:
            reason = "%s: %s" % (type(e).__name__, e.message)

        report.pair_checks += checker.pair_checks
        report.path_checks += checker.path_checks
        if reason is None:
            report.passed += 1
        else:
            logger.warning("case %d (n=%d, c=%g) failed: %s", case_index, n, c, reason)
            failure = VerificationFailure(
                case_index=case_index,
                n=n,
                c=c,
                reason=reason,
                formula_text=render_native(formula),
            )
            report.failures.append(failure)

        if progress_callback:
            progress_callback(1)

    return report
