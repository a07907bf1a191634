"""Random formulas with p = c/(2n), cycle census and Monte Carlo campaigns."""

import logging
import math
from collections import Counter
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from landscape.constants import MIN_COMPARISON_SAMPLE
from landscape.core.clusters import ClusterAnalyzer, count_comparable_pairs
from landscape.core.formula import formula_from_vertices
from landscape.core.theory import compare_distributions, theory_values
from landscape.exceptions import ParameterError
from landscape.models import (
    CampaignSummary,
    EnsembleConfig,
    Formula,
    ImplicationDigraph,
    TrialRecord,
)

logger = logging.getLogger(__name__)


def clause_universe_size(n: int) -> int:
    """Number of distinct incompatibilities on n loci, 2n(n-1)."""
    return 2 * n * (n - 1)


def validate_config(cfg: EnsembleConfig) -> None:
    """Reject parameters outside the ensemble's domain."""
    if cfg.n < 2:
        raise ParameterError("n must be at least 2, got %d" % cfg.n, "n")
    if cfg.c < 0:
        raise ParameterError("c must be non-negative, got %g" % cfg.c, "c")
    if cfg.p > 1:
        raise ParameterError("p = c/(2n) = %g exceeds 1" % cfg.p, "c")
    if cfg.trials < 1:
        raise ParameterError("trials must be at least 1, got %d" % cfg.trials, "trials")
    if cfg.max_cycle_len < 2:
        raise ParameterError("max cycle length must be at least 2, got %d" % cfg.max_cycle_len, "max_cycle_len")
    if cfg.seed < 0:
        raise ParameterError("seed must be non-negative, got %d" % cfg.seed, "seed")


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    """Generator for one trial, independent of which worker runs it."""
    sequence = np.random.SeedSequence(seed, spawn_key=(trial_index,))
    return np.random.default_rng(sequence)


def _canonical(first: int, second: int) -> Tuple[int, int]:
    if (first >> 1) < (second >> 1):
        return first, second
    return second, first


def _sample_sparse(n: int, m: int, rng: np.random.Generator) -> Set[Tuple[int, int]]:
    """Draw m distinct vertex pairs on distinct loci by rejection."""
    chosen: Set[Tuple[int, int]] = set()
    while len(chosen) < m:
        batch = m - len(chosen)
        first_loci = rng.integers(0, n, size=batch)
        second_loci = rng.integers(0, n - 1, size=batch)
        second_loci = second_loci + (second_loci >= first_loci)
        first_signs = rng.integers(0, 2, size=batch)
        second_signs = rng.integers(0, 2, size=batch)

        first_vertices = 2 * first_loci + first_signs
        second_vertices = 2 * second_loci + second_signs
        for first, second in zip(first_vertices.tolist(), second_vertices.tolist()):
            chosen.add(_canonical(first, second))
            if len(chosen) == m:
                break
    return chosen


def _sample_dense(n: int, m: int, rng: np.random.Generator) -> Set[Tuple[int, int]]:
    """Draw m distinct pairs straight from the indexed universe; used when m is a large share of it."""
    first_loci, second_loci = np.triu_indices(n, 1)
    picks = rng.choice(clause_universe_size(n), size=m, replace=False)
    pair_index = picks // 4
    signs = picks % 4
    first_vertices = 2 * first_loci[pair_index] + (signs >> 1)
    second_vertices = 2 * second_loci[pair_index] + (signs & 1)
    return set(zip(first_vertices.tolist(), second_vertices.tolist()))


def sample_formula(n: int, c: float, rng: np.random.Generator) -> Formula:
    """
    Draw a random formula: each of the 2n(n-1) incompatibilities independently with p = c/(2n).

    The clause count is Binomial(2n(n-1), p); given the count, the clauses are a
    uniform subset of that size.

    Args:
        n: Number of loci
        c: Ensemble constant
        rng: Source of randomness

    Returns:
        Formula with sorted, distinct clauses
    """
    if n < 1:
        raise ParameterError("n must be at least 1, got %d" % n, "n")
    p = c / (2 * n)
    if not 0 <= p <= 1:
        raise ParameterError("p = c/(2n) = %g is outside [0, 1]" % p, "c")

    universe = clause_universe_size(n)
    m = int(rng.binomial(universe, p)) if universe else 0
    if m == 0:
        return Formula(n, ())

    if 2 * m > universe:
        pairs = _sample_dense(n, m, rng)
    else:
        pairs = _sample_sparse(n, m, rng)

    return formula_from_vertices(n, pairs)


def cycle_census(digraph: ImplicationDigraph, max_len: int) -> Dict[int, int]:
    """
    Count complementary pairs of simple i-cycles on strictly distinct alleles.

    A cycle is enumerated from its smallest vertex, visiting larger vertices
    only and never two alleles of one locus. Of a cycle and its complement
    only the one whose smallest vertex is smaller is counted.

    Args:
        digraph: Implication digraph
        max_len: Largest cycle length counted

    Returns:
        Mapping i -> number of pairs for 2 <= i <= max_len
    """
    counts = {length: 0 for length in range(2, max_len + 1)}
    successors = digraph.successors

    for start in range(digraph.vertex_count):
        if not successors[start]:
            continue
        used_loci = {start >> 1}

        def extend(vertex: int, depth: int, complement_min: int) -> None:
            for target in successors[vertex]:
                if target == start:
                    if depth >= 2 and start < complement_min:
                        counts[depth] += 1
                    continue
                if target < start or depth == max_len or (target >> 1) in used_loci:
                    continue
                used_loci.add(target >> 1)
                extend(target, depth + 1, min(complement_min, target ^ 1))
                used_loci.discard(target >> 1)

        extend(start, 1, start ^ 1)

    return counts


def _is_simple_cycle(members: Sequence[int], successors: Sequence[Sequence[int]]) -> bool:
    member_set = set(members)
    for vertex in members:
        inside = [target for target in successors[vertex] if target in member_set]
        if len(inside) != 1:
            return False
    return True


def measure_trial(cfg: EnsembleConfig, trial_index: int) -> TrialRecord:
    """Sample one formula and record its splitting pairs, cycle census and cluster count."""
    rng = trial_rng(cfg.seed, trial_index)
    formula = sample_formula(cfg.n, cfg.c, rng)
    analyzer = ClusterAnalyzer(formula)
    decomposition = analyzer.decomposition

    y_count = len(analyzer.pairs)
    census = cycle_census(analyzer.digraph, cfg.max_cycle_len)
    comparable_pairs = count_comparable_pairs(decomposition)
    cluster_count = analyzer.cluster_count()

    y_equals_t_applicable = False
    if analyzer.satisfiable and comparable_pairs == 0:
        nontrivial = [members for members in decomposition.components if len(members) > 1]
        y_equals_t_applicable = all(
            len(members) <= cfg.max_cycle_len and _is_simple_cycle(members, analyzer.digraph.successors)
            for members in nontrivial
        )

    return TrialRecord(
        trial_index=trial_index,
        satisfiable=analyzer.satisfiable,
        m_clauses=len(formula),
        Y=y_count,
        X=census,
        T=sum(census.values()),
        comparable_pairs=comparable_pairs,
        cluster_count=cluster_count,
        y_equals_t_applicable=y_equals_t_applicable,
    )


def run_trial_chunk(cfg: EnsembleConfig, start: int, stop: int) -> List[TrialRecord]:
    """Trials start..stop-1; module level so worker processes can import it."""
    return [measure_trial(cfg, trial_index) for trial_index in range(start, stop)]


def _mean_and_error(values: Sequence[float]) -> Tuple[float, float]:
    if not values:
        return 0.0, 0.0
    array = np.asarray(values, dtype=float)
    mean = float(array.mean())
    if len(array) < 2:
        return mean, 0.0
    return mean, float(array.std(ddof=1) / math.sqrt(len(array)))


def summarize_campaign(cfg: EnsembleConfig, records: Sequence[TrialRecord]) -> CampaignSummary:
    """
    Aggregate trial records and set them against the closed-form values.

    The Poisson comparison is only made on samples of at least the advised
    size and when the finite-n mean is finite.
    """
    trials = len(records)
    if trials == 0:
        raise ParameterError("Cannot summarize a campaign without trials", "trials")

    satisfiable = [record for record in records if record.satisfiable]
    satisfiable_count = len(satisfiable)

    y_histogram = dict(sorted(Counter(record.Y for record in records).items()))
    cluster_histogram = dict(sorted(Counter(record.cluster_count for record in satisfiable).items()))

    x_means: Dict[int, float] = {}
    x_errors: Dict[int, float] = {}
    for length in range(2, cfg.max_cycle_len + 1):
        mean, error = _mean_and_error([record.X.get(length, 0) for record in records])
        x_means[length] = mean
        x_errors[length] = error

    t_mean, _ = _mean_and_error([record.T for record in records])
    comparable_mean, comparable_error = _mean_and_error([record.comparable_pairs for record in records])

    unique_fraction = None
    if satisfiable_count:
        unique_fraction = sum(1 for record in satisfiable if record.cluster_count == 1) / satisfiable_count

    checked = [record for record in records if record.y_equals_t_applicable]
    violations = sum(1 for record in checked if record.Y != record.T)
    if violations:
        logger.warning("%d of %d checked trials have Y != T", violations, len(checked))

    theory = theory_values(cfg.n, cfg.c, cfg.max_cycle_len)
    comparison = None
    if trials >= MIN_COMPARISON_SAMPLE and math.isfinite(theory.lambda_n):
        comparison = compare_distributions(y_histogram, theory.lambda_n)

    return CampaignSummary(
        config=cfg,
        trials=trials,
        satisfiable_fraction=satisfiable_count / trials,
        unsat_fraction=(trials - satisfiable_count) / trials,
        y_histogram=y_histogram,
        cluster_histogram=cluster_histogram,
        x_means=x_means,
        x_standard_errors=x_errors,
        t_mean=t_mean,
        comparable_pairs_mean=comparable_mean,
        comparable_pairs_standard_error=comparable_error,
        unique_cluster_fraction=unique_fraction,
        y_equals_t_checked_trials=len(checked),
        y_equals_t_violations=violations,
        theory=theory,
        comparison=comparison,
    )


def run_campaign(
    cfg: EnsembleConfig,
    threads: Optional[int] = None,
    progress_callback: Optional[Callable[[int], None]] = None,
) -> Tuple[List[TrialRecord], CampaignSummary]:
    """
    Run cfg.trials independent trials and summarize them.

    Args:
        cfg: Campaign parameters
        threads: Worker cap; defaults to the configured value
        progress_callback: Called with the number of trials just completed

    Returns:
        Tuple of (records ordered by trial index, summary)
    """
    validate_config(cfg)

    # Import here to avoid circular imports
    from landscape.services.campaign import CampaignExecutor

    executor = CampaignExecutor(max_workers=threads)
    records = executor.run(cfg, progress_callback)
    summary = summarize_campaign(cfg, records)
    logger.info(
        "campaign n=%d c=%g trials=%d: sat=%.4f mean Y=%.4f",
        cfg.n,
        cfg.c,
        cfg.trials,
        summary.satisfiable_fraction,
        sum(value * count for value, count in summary.y_histogram.items()) / summary.trials,
    )
    return records, summary
