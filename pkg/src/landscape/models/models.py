"""Data models for the landscape package."""

import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import numpy as np


@dataclass(frozen=True, order=True)
class Literal:
    """An allele at one locus; sign 0 is the allele 0_i, sign 1 is 1_i."""

    locus: int
    sign: int

    @property
    def vertex(self) -> int:
        """Vertex index in the implication digraph; complement is index XOR 1."""
        return 2 * self.locus + self.sign

    @classmethod
    def from_vertex(cls, vertex: int) -> "Literal":
        return cls(vertex >> 1, vertex & 1)

    def negate(self) -> "Literal":
        return Literal(self.locus, 1 - self.sign)

    @classmethod
    def parse(cls, text: str) -> "Literal":
        """
        Parse the user-facing form "<sign>_<locus>" with a 1-indexed locus.

        Args:
            text: Literal text such as "0_2" or "1_3"

        Returns:
            The literal with a 0-indexed locus
        """
        sign_text, separator, locus_text = text.strip().partition("_")
        if not separator or sign_text not in ("0", "1") or not locus_text.isdigit():
            raise ValueError("Invalid allele '%s', expected <0|1>_<locus>" % text)
        locus = int(locus_text)
        if locus < 1:
            raise ValueError("Loci are numbered from 1, got '%s'" % text)
        return cls(locus - 1, int(sign_text))

    def __str__(self) -> str:
        return "%d_%d" % (self.sign, self.locus + 1)


@dataclass(frozen=True)
class Genotype:
    """One allele per locus, packed into an integer whose bit i is the allele at locus i."""

    n: int
    code: int

    def allele(self, locus: int) -> int:
        return (self.code >> locus) & 1

    def has(self, literal: Literal) -> bool:
        return self.allele(literal.locus) == literal.sign

    def flip(self, locus: int) -> "Genotype":
        return Genotype(self.n, self.code ^ (1 << locus))

    def with_allele(self, literal: Literal) -> "Genotype":
        if self.has(literal):
            return self
        return self.flip(literal.locus)

    def literals(self) -> List[Literal]:
        return [Literal(locus, int(character)) for locus, character in enumerate(str(self))]

    def differing_loci(self, other: "Genotype") -> List[int]:
        """Loci, in increasing order, on which the two genotypes carry different alleles."""
        difference = self.code ^ other.code
        if not difference:
            return []
        bits = bin(difference)[:1:-1]
        return [locus for locus, character in enumerate(bits) if character == "1"]

    def hamming(self, other: "Genotype") -> int:
        return bin(self.code ^ other.code).count("1")

    @classmethod
    def parse(cls, text: str) -> "Genotype":
        """Parse a binary string whose leftmost character is locus 1."""
        stripped = text.strip()
        if not stripped or any(character not in "01" for character in stripped):
            raise ValueError("Invalid genotype '%s', expected a binary string" % text)
        return cls(len(stripped), int(stripped[::-1], 2))

    def __str__(self) -> str:
        return format(self.code, "0%db" % self.n)[::-1] if self.n else ""


@dataclass(frozen=True, order=True)
class Incompatibility:
    """An unordered pair of alleles on distinct loci, stored lower locus first."""

    first: Literal
    second: Literal

    def literals(self) -> Tuple[Literal, Literal]:
        return self.first, self.second

    def __str__(self) -> str:
        return "%s %s" % (self.first, self.second)


@dataclass(frozen=True)
class Formula:
    """A duplicate-free, sorted set of incompatibilities over n loci."""

    n: int
    clauses: Tuple[Incompatibility, ...] = ()

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self) -> Iterator[Incompatibility]:
        return iter(self.clauses)


@dataclass(frozen=True)
class ImplicationDigraph:
    """Vertex v = 2*locus + sign; each incompatibility (x, y) adds x -> not y and y -> not x."""

    n: int
    successors: Tuple[Tuple[int, ...], ...]
    predecessors: Tuple[Tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return 2 * self.n

    @property
    def edge_count(self) -> int:
        return sum(len(targets) for targets in self.successors)


@dataclass(frozen=True)
class ReachabilityIndex:
    """
    Reachability over the condensation.

    closure[c] is a bitset over the nontrivial components reachable from c;
    target_bit maps a nontrivial component to its bit position.
    """

    target_bit: Dict[int, int]
    closure: Tuple[int, ...]


@dataclass(frozen=True)
class SccDecomposition:
    """Strong components listed in a topological order of the condensation."""

    n: int
    component_of: Tuple[int, ...]
    components: Tuple[Tuple[int, ...], ...]
    complement_of: Tuple[int, ...]
    condensation: Tuple[Tuple[int, ...], ...]
    reach: ReachabilityIndex

    @property
    def component_count(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class SplittingPair:
    """Complementary, nontrivial, incomparable strong components."""

    comp: int
    comp_complement: int
    loci: FrozenSet[int]
    literals: Tuple[Literal, ...]

    def complement_literals(self) -> Tuple[Literal, ...]:
        return tuple(sorted(literal.negate() for literal in self.literals))


@dataclass(frozen=True)
class ClusterReport:
    """Outcome of the splitting-pair analysis of one formula."""

    n: int
    clause_count: int
    satisfiable: bool
    splitting_pairs: Tuple[SplittingPair, ...]
    k: int
    cluster_count: int
    component_sizes: Tuple[int, ...] = ()


@dataclass
class ViableSubgraph:
    """Brute-force view of the viable genotypes and their Hamming-1 components."""

    n: int
    viable: np.ndarray
    component_id: np.ndarray
    component_count: int

    @property
    def viable_count(self) -> int:
        return int(np.count_nonzero(self.viable))

    def viable_codes(self) -> np.ndarray:
        return np.flatnonzero(self.viable)


@dataclass(frozen=True)
class EnsembleConfig:
    """Parameters of one Monte Carlo campaign; p = c / (2n)."""

    n: int
    c: float
    trials: int
    seed: int
    max_cycle_len: int = 6

    @property
    def p(self) -> float:
        return self.c / (2 * self.n)


@dataclass(frozen=True)
class TrialRecord:
    """Measurements taken on one random formula."""

    trial_index: int
    satisfiable: bool
    m_clauses: int
    Y: int
    X: Dict[int, int]
    T: int
    comparable_pairs: int
    cluster_count: int
    y_equals_t_applicable: bool = False

    @property
    def log2_clusters(self) -> float:
        return math.log2(self.cluster_count) if self.satisfiable else -math.inf


@dataclass(frozen=True)
class TheoryValues:
    """Closed-form predictions for the random ensemble at given n, c and census length m."""

    n: int
    c: float
    max_cycle_len: int
    p: float
    lambda_n: float
    lambda_m_n: float
    mu: Dict[int, float]
    mu_limit: Dict[int, float]
    lambda_inf: Optional[float] = None
    unique_cluster_prob: Optional[float] = None
    tail_bound: Optional[float] = None


@dataclass(frozen=True)
class DistributionComparison:
    """Empirical splitting-pair histogram against a Poisson law."""

    lam: float
    sample_size: float
    bins: Tuple[int, ...]
    observed: Tuple[float, ...]
    expected: Tuple[float, ...]
    deviations: Tuple[float, ...]
    chi_square: float
    degrees_of_freedom: int
    p_value: Optional[float] = None


@dataclass
class CampaignSummary:
    """Aggregated statistics of a campaign, with theory values alongside."""

    config: EnsembleConfig
    trials: int
    satisfiable_fraction: float
    unsat_fraction: float
    y_histogram: Dict[int, int]
    cluster_histogram: Dict[int, int]
    x_means: Dict[int, float]
    x_standard_errors: Dict[int, float]
    t_mean: float
    comparable_pairs_mean: float
    comparable_pairs_standard_error: float
    unique_cluster_fraction: Optional[float]
    y_equals_t_checked_trials: int
    y_equals_t_violations: int
    theory: TheoryValues
    comparison: Optional[DistributionComparison] = None


@dataclass(frozen=True)
class VerificationFailure:
    """One disagreement between the analytic engine and the oracle."""

    case_index: int
    n: int
    c: float
    reason: str
    formula_text: str


@dataclass
class VerificationReport:
    """Result of an oracle-equivalence sweep."""

    cases: int
    passed: int
    pair_checks: int = 0
    path_checks: int = 0
    failures: List[VerificationFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures
