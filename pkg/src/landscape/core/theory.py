"""Closed-form predictions for the random ensemble and the Poisson comparison."""

import logging
import math
from typing import Dict, List, Mapping, Sequence, Tuple

from scipy.stats import chisquare, poisson

from landscape.constants import MIN_COMPARISON_SAMPLE, MIN_EXPECTED_COUNT, POISSON_BINS
from landscape.exceptions import ParameterError
from landscape.models import DistributionComparison, TheoryValues

logger = logging.getLogger(__name__)


def poisson_pmf(j: int, lam: float) -> float:
    """P(Psi = j) for Psi ~ Poisson(lam)."""
    return float(poisson.pmf(j, lam))


def limit_lambda(c: float) -> float:
    """Limiting mean of the number of splitting pairs, -(ln(1-c) + c)/2, for 0 < c < 1."""
    if not 0 < c < 1:
        raise ParameterError("The limiting mean is defined only for 0 < c < 1, got c=%g" % c, "c")
    return -0.5 * (math.log1p(-c) + c)


def unique_cluster_probability(c: float) -> float:
    """Limiting probability of a single cluster, sqrt((1-c) e^c)."""
    if not 0 < c < 1:
        raise ParameterError("The single-cluster limit is defined only for 0 < c < 1, got c=%g" % c, "c")
    return math.sqrt((1 - c) * math.exp(c))


def cycle_pair_means(n: int, c: float, max_len: int) -> Dict[int, float]:
    """
    Expected number of complementary i-cycle pairs, ((n)_i / i) 2^(i-1) p^i.

    Args:
        n: Number of loci
        c: Ensemble constant, p = c/(2n)
        max_len: Largest cycle length i to evaluate

    Returns:
        Mapping i -> mean for 2 <= i <= max_len (0 when i > n)
    """
    p = c / (2 * n)
    means: Dict[int, float] = {}
    # scaled = (n)_i (2p)^i, so the mean is scaled / (2i)
    scaled = 1.0
    for i in range(1, max_len + 1):
        scaled *= max(n - i + 1, 0) * 2 * p
        if i >= 2:
            means[i] = scaled / (2 * i)
    return means


def finite_lambda(n: int, c: float) -> float:
    """Expected number of complementary simple cycle pairs of any length, summed over 2 <= i <= n."""
    p = c / (2 * n)
    total = 0.0
    scaled = 1.0
    for i in range(1, n + 1):
        scaled *= (n - i + 1) * 2 * p
        if scaled == 0.0:
            break
        if i >= 2:
            total += scaled / (2 * i)
    return total


def theory_values(n: int, c: float, max_cycle_len: int) -> TheoryValues:
    """
    Evaluate the closed forms at finite n together with their limits.

    Limits in c (lambda, single-cluster probability, tail bound) are None
    outside 0 < c < 1.
    """
    if n < 1:
        raise ParameterError("n must be at least 1, got %d" % n, "n")
    if c < 0:
        raise ParameterError("c must be non-negative, got %g" % c, "c")
    if max_cycle_len < 2:
        raise ParameterError("max cycle length must be at least 2, got %d" % max_cycle_len, "max_cycle_len")

    mu = cycle_pair_means(n, c, max_cycle_len)
    mu_limit = {i: c**i / (2 * i) for i in range(2, max_cycle_len + 1)}
    lambda_m_n = sum(mu.values())
    lambda_n = finite_lambda(n, c)

    lambda_inf = None
    unique_prob = None
    tail = None
    if 0 < c < 1:
        lambda_inf = limit_lambda(c)
        unique_prob = unique_cluster_probability(c)
        tail = max(lambda_inf - sum(mu_limit.values()), 0.0)

    return TheoryValues(
        n=n,
        c=c,
        max_cycle_len=max_cycle_len,
        p=c / (2 * n),
        lambda_n=lambda_n,
        lambda_m_n=lambda_m_n,
        mu=mu,
        mu_limit=mu_limit,
        lambda_inf=lambda_inf,
        unique_cluster_prob=unique_prob,
        tail_bound=tail,
    )


def pool_sparse_tail(
    observed: Sequence[float], expected: Sequence[float], minimum: float = MIN_EXPECTED_COUNT
) -> Tuple[List[float], List[float]]:
    """
    Merge trailing bins into their left neighbour while the last expected count is below minimum.

    Both sequences are merged in step, so their totals are unchanged. A single
    bin is never merged further.
    """
    pooled_observed = list(observed)
    pooled_expected = list(expected)
    while len(pooled_expected) > 1 and pooled_expected[-1] < minimum:
        tail = pooled_expected.pop()
        pooled_expected[-1] += tail
        tail = pooled_observed.pop()
        pooled_observed[-1] += tail
    return pooled_observed, pooled_expected


def compare_distributions(histogram: Mapping[int, float], lam: float) -> DistributionComparison:
    """
    Compare an empirical histogram of splitting-pair counts with Poisson(lam).

    Bins are j = 0..3 plus a pooled tail j >= 4. Deviations are per bin;
    for the chi-square statistic, trailing bins whose expected count is below
    five are merged into their left neighbour first.

    Args:
        histogram: Count (or weight) per observed value j
        lam: Poisson mean

    Returns:
        DistributionComparison; no pass/fail verdict is made here
    """
    sample_size = float(sum(histogram.values()))
    if sample_size <= 0:
        raise ParameterError("Cannot compare an empty histogram", "histogram")
    if sample_size < MIN_COMPARISON_SAMPLE:
        logger.warning("Comparing a sample of %d draws; at least %d are advised", sample_size, MIN_COMPARISON_SAMPLE)

    tail_start = POISSON_BINS - 1
    observed_counts = [float(histogram.get(j, 0)) for j in range(tail_start)]
    tail_count = sum(float(count) for value, count in histogram.items() if value >= tail_start)
    observed_counts.append(tail_count)

    expected_probs = [poisson_pmf(j, lam) for j in range(tail_start)]
    expected_probs.append(float(poisson.sf(tail_start - 1, lam)))

    observed_probs = [count / sample_size for count in observed_counts]
    deviations = [abs(observed - expected) for observed, expected in zip(observed_probs, expected_probs)]

    expected_counts = [prob * sample_size for prob in expected_probs]
    pooled_observed, pooled_expected = pool_sparse_tail(observed_counts, expected_counts)

    degrees_of_freedom = len(pooled_expected) - 1
    if degrees_of_freedom < 1:
        chi_square_value = 0.0
        p_value = None
    else:
        result = chisquare(pooled_observed, pooled_expected)
        chi_square_value = float(result.statistic)
        p_value = float(result.pvalue)

    return DistributionComparison(
        lam=lam,
        sample_size=sample_size,
        bins=tuple(range(POISSON_BINS)),
        observed=tuple(observed_probs),
        expected=tuple(expected_probs),
        deviations=tuple(deviations),
        chi_square=chi_square_value,
        degrees_of_freedom=degrees_of_freedom,
        p_value=p_value,
    )
