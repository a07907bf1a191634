"""Splitting pairs, cluster counts and mutational paths between viable genotypes."""

import logging
from typing import List, Optional, Sequence, Set

from landscape.core.components import comparable, is_satisfiable, reaches, satisfying_assignment, scc
from landscape.core.digraph import build_digraph, reachable_vertices
from landscape.core.formula import violated_incompatibility
from landscape.exceptions import InviableGenotypeError, LandscapeError, PathConstructionError, UnsatisfiableFormulaError
from landscape.models import ClusterReport, Formula, Genotype, Literal, SccDecomposition, SplittingPair

logger = logging.getLogger(__name__)


def _complementary_pairs(decomposition: SccDecomposition):
    """Yield (component, complement) for nontrivial components, each pair once, by smallest vertex."""
    components = decomposition.components
    for component, members in enumerate(components):
        if len(members) < 2:
            continue
        complement = decomposition.complement_of[component]
        if complement == component:
            continue
        if members[0] < components[complement][0]:
            yield component, complement


def splitting_pairs(decomposition: SccDecomposition) -> List[SplittingPair]:
    """
    Complementary nontrivial components that are unrelated in the order.

    Args:
        decomposition: Strong components of a satisfiable formula

    Returns:
        Splitting pairs ordered by smallest member vertex; comp holds that vertex
    """
    if not is_satisfiable(decomposition):
        raise UnsatisfiableFormulaError("Splitting pairs are undefined for an unsatisfiable formula")

    pairs = []
    for component, complement in _complementary_pairs(decomposition):
        if comparable(decomposition, component, complement):
            continue
        members = decomposition.components[component]
        pair = SplittingPair(
            comp=component,
            comp_complement=complement,
            loci=frozenset(vertex >> 1 for vertex in members),
            literals=tuple(Literal.from_vertex(vertex) for vertex in members),
        )
        pairs.append(pair)

    pairs.sort(key=lambda pair: decomposition.components[pair.comp][0])
    return pairs


def count_comparable_pairs(decomposition: SccDecomposition) -> int:
    """Number of complementary nontrivial component pairs that ARE comparable."""
    count = 0
    for component, complement in _complementary_pairs(decomposition):
        if comparable(decomposition, component, complement):
            count += 1
    return count


def _side_conflicts(decomposition: SccDecomposition, pairs: Sequence[SplittingPair]) -> List[int]:
    """
    Bitmask per side 2i+s of the sides that cannot be carried together with it.

    Side 0 of pair i is pair.comp, side 1 its complement. Sides a and b
    conflict when a reaches the complement of b, which by the mirror property
    is the same as b reaching the complement of a.
    """
    components = [(pair.comp, pair.comp_complement) for pair in pairs]
    conflicts = [0] * (2 * len(pairs))
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            for s in (0, 1):
                for t in (0, 1):
                    if reaches(decomposition, components[i][s], components[j][1 - t]):
                        conflicts[2 * i + s] |= 1 << (2 * j + t)
                        conflicts[2 * j + t] |= 1 << (2 * i + s)
    return conflicts


def _conflict_groups(pair_count: int, conflicts: List[int]) -> List[List[int]]:
    """Pairs joined, directly or through others, by a conflict between their sides."""
    group_of = [-1] * pair_count
    groups: List[List[int]] = []
    for start in range(pair_count):
        if group_of[start] != -1:
            continue
        group_of[start] = len(groups)
        members = [start]
        stack = [start]
        while stack:
            pair_index = stack.pop()
            neighbours = conflicts[2 * pair_index] | conflicts[2 * pair_index + 1]
            while neighbours:
                side = (neighbours & -neighbours).bit_length() - 1
                neighbours &= neighbours - 1
                other = side >> 1
                if group_of[other] == -1:
                    group_of[other] = len(groups)
                    members.append(other)
                    stack.append(other)
        groups.append(sorted(members))
    return groups


def _count_group(members: List[int], conflicts: List[int]) -> int:
    count = 0
    stack = [(0, 0)]
    while stack:
        position, chosen = stack.pop()
        if position == len(members):
            count += 1
            continue
        pair_index = members[position]
        for side in (2 * pair_index, 2 * pair_index + 1):
            if not conflicts[side] & chosen:
                stack.append((position + 1, chosen | (1 << side)))
    return count


def count_clusters(decomposition: SccDecomposition, pairs: Sequence[SplittingPair]) -> int:
    """
    Exact number of clusters of a satisfiable formula.

    A viable genotype carries exactly one side of every splitting pair, and two
    viable genotypes share a cluster iff they carry the same sides. The count is
    the number of side choices some viable genotype realizes: those where no
    chosen side reaches the complement of another. It equals 2^k only when no
    two splitting pairs are ordered against each other.

    Args:
        decomposition: Strong components of a satisfiable formula
        pairs: Its splitting pairs

    Returns:
        Number of realizable side choices, 1 when k = 0 and between 2 and 2^k otherwise
    """
    conflicts = _side_conflicts(decomposition, pairs)
    total = 1
    for members in _conflict_groups(len(pairs), conflicts):
        if len(members) == 1:
            total *= 2
        else:
            total *= _count_group(members, conflicts)
    return total


class ClusterAnalyzer:
    """Splitting-pair analysis of one formula, reused across genotype queries."""

    def __init__(self, formula: Formula) -> None:
        self.formula = formula
        self.digraph = build_digraph(formula)
        self.decomposition = scc(self.digraph)
        self.satisfiable = is_satisfiable(self.decomposition)
        self.pairs: List[SplittingPair] = splitting_pairs(self.decomposition) if self.satisfiable else []

    def cluster_count(self) -> int:
        """Exact cluster count, 0 when unsatisfiable."""
        if not self.satisfiable:
            return 0
        return count_clusters(self.decomposition, self.pairs)

    def report(self) -> ClusterReport:
        """Cluster report: k splitting pairs and the exact number of clusters they cut out."""
        k = len(self.pairs)
        cluster_count = self.cluster_count()
        sizes = [len(members) for members in self.decomposition.components if len(members) > 1]
        sizes.sort(reverse=True)
        return ClusterReport(
            n=self.formula.n,
            clause_count=len(self.formula),
            satisfiable=self.satisfiable,
            splitting_pairs=tuple(self.pairs),
            k=k,
            cluster_count=cluster_count,
            component_sizes=tuple(sizes),
        )

    def require_viable(self, genotype: Genotype) -> None:
        clause = violated_incompatibility(genotype, self.formula)
        if clause is not None:
            error_message = "Genotype %s is inviable: it carries the incompatible pair (%s)" % (genotype, clause)
            raise InviableGenotypeError(error_message, genotype, clause)

    def same_cluster(self, u: Genotype, v: Genotype) -> bool:
        """
        Connectivity by the splitting-pair criterion.

        u and v are connected iff no splitting pair has all of its loci among
        the loci where u and v differ.
        """
        self.require_viable(u)
        self.require_viable(v)

        differing = set(u.differing_loci(v))
        for pair in self.pairs:
            if pair.loci <= differing:
                return False
        return True

    def find_path(self, u: Genotype, v: Genotype) -> Optional[List[Genotype]]:
        """
        Single-locus mutational path from u to v through viable genotypes.

        Differing loci are fixed in increasing order. For the target allele x
        at a locus, the alleles of L+(x) still missing from the current
        genotype form an acyclic subgraph; its leaves are flipped first, in
        increasing vertex order, until x itself is flipped.

        Args:
            u: Viable start genotype
            v: Viable end genotype

        Returns:
            The genotypes u, ..., v, or None when u and v lie in different clusters
        """
        if not self.same_cluster(u, v):
            return None

        successors = self.digraph.successors
        current = u
        path = [u]

        for locus in u.differing_loci(v):
            if current.allele(locus) == v.allele(locus):
                continue

            target = Literal(locus, v.allele(locus))
            remaining: Set[int] = set()
            for vertex in reachable_vertices(successors, target.vertex):
                if not current.has(Literal.from_vertex(vertex)):
                    remaining.add(vertex)

            while remaining:
                leaves = sorted(
                    vertex
                    for vertex in remaining
                    if not any(successor in remaining for successor in successors[vertex])
                )
                if not leaves:
                    error_message = "No leaf left while fixing locus %d; trimmed out-graph has a cycle" % (locus + 1)
                    raise PathConstructionError(error_message)
                for vertex in leaves:
                    current = current.flip(vertex >> 1)
                    path.append(current)
                    remaining.discard(vertex)

        if current != v:
            raise PathConstructionError("Path ended at %s instead of %s" % (current, v))
        return path

    def strategy_witness(self, pair: SplittingPair, side: int = 0) -> Genotype:
        """
        A viable genotype carrying every allele of one side of a splitting pair.

        Args:
            pair: A splitting pair of this formula
            side: 0 for pair.comp, 1 for its complement

        Returns:
            Genotype with all alleles of A = union of L+(z) over z in the chosen
            component, completed by a satisfying assignment elsewhere
        """
        literals = pair.literals if side == 0 else pair.complement_literals()
        base = satisfying_assignment(self.decomposition)

        implied: Set[int] = set()
        for literal in literals:
            implied |= reachable_vertices(self.digraph.successors, literal.vertex)

        witness = base
        for vertex in sorted(implied):
            witness = witness.with_allele(Literal.from_vertex(vertex))

        clause = violated_incompatibility(witness, self.formula)
        if clause is not None:
            raise LandscapeError("Strategy completion %s violates (%s)" % (witness, clause))
        return witness


def cluster_report(formula: Formula) -> ClusterReport:
    """Full pipeline: digraph, strong components, satisfiability, splitting pairs, cluster count."""
    report = ClusterAnalyzer(formula).report()
    logger.debug("cluster report: n=%d m=%d k=%d", report.n, report.clause_count, report.k)
    return report


def same_cluster(u: Genotype, v: Genotype, formula: Formula) -> bool:
    """Whether two viable genotypes are joined by single-locus mutations."""
    return ClusterAnalyzer(formula).same_cluster(u, v)


def find_path(u: Genotype, v: Genotype, formula: Formula) -> Optional[List[Genotype]]:
    """Mutational path from u to v, or None when they lie in different clusters."""
    return ClusterAnalyzer(formula).find_path(u, v)
