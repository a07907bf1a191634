"""Brute-force ground truth: enumerate the cube, keep viable genotypes, find Hamming-1 components."""

import logging
from typing import Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from landscape.config import config
from landscape.exceptions import DimensionError, InviableGenotypeError, OracleCapacityError
from landscape.models import Formula, Genotype, ViableSubgraph

logger = logging.getLogger(__name__)


def enumerate_viable(formula: Formula, cap: Optional[int] = None) -> ViableSubgraph:
    """
    Enumerate all 2^n genotype codes and split the viable ones into clusters.

    Args:
        formula: The incompatibility formula
        cap: Largest n allowed; defaults to the configured oracle cap

    Returns:
        ViableSubgraph with a viability mask and component ids (-1 where inviable)
    """
    limit = cap if cap is not None else config.get_oracle_cap()
    n = formula.n
    if n > limit:
        error_message = "Oracle enumeration of %d loci exceeds the cap of %d" % (n, limit)
        raise OracleCapacityError(error_message, n, limit)

    size = 1 << n
    codes = np.arange(size, dtype=np.int64)
    alleles = [((codes >> locus) & 1).astype(bool) for locus in range(n)]

    viable = np.ones(size, dtype=bool)
    for clause in formula.clauses:
        has_first = alleles[clause.first.locus] if clause.first.sign else ~alleles[clause.first.locus]
        has_second = alleles[clause.second.locus] if clause.second.sign else ~alleles[clause.second.locus]
        viable &= ~(has_first & has_second)

    component_id = np.full(size, -1, dtype=np.int64)
    viable_count = int(np.count_nonzero(viable))
    if viable_count == 0:
        return ViableSubgraph(n=n, viable=viable, component_id=component_id, component_count=0)

    # Edge from each viable code with allele 0 at a locus to its viable neighbour with allele 1.
    sources = []
    for locus in range(n):
        mask = 1 << locus
        edge_mask = viable & ~alleles[locus] & viable[codes ^ mask]
        sources.append(codes[edge_mask])
    rows = np.concatenate(sources)
    columns = np.concatenate([source | (1 << locus) for locus, source in enumerate(sources)])

    data = np.ones(len(rows), dtype=np.int8)
    graph = csr_matrix((data, (rows, columns)), shape=(size, size))
    _, labels = connected_components(graph, directed=False)

    unique_labels, inverse = np.unique(labels[viable], return_inverse=True)
    component_id[viable] = inverse
    component_count = len(unique_labels)

    logger.debug("oracle: n=%d viable=%d components=%d", n, viable_count, component_count)
    return ViableSubgraph(n=n, viable=viable, component_id=component_id, component_count=component_count)


def oracle_connected(subgraph: ViableSubgraph, u: Genotype, v: Genotype) -> bool:
    """Whether two viable genotypes share a component of the viable subgraph."""
    for genotype in (u, v):
        if genotype.n != subgraph.n:
            error_message = "Genotype has %d loci but the subgraph has %d" % (genotype.n, subgraph.n)
            raise DimensionError(error_message, subgraph.n, genotype.n)
        if not subgraph.viable[genotype.code]:
            raise InviableGenotypeError("Genotype %s is inviable" % genotype, genotype)

    return bool(subgraph.component_id[u.code] == subgraph.component_id[v.code])
