"""Alleles, genotypes and incompatibility formulas."""

from typing import Dict, Iterable, Optional, Tuple

from landscape.exceptions import DimensionError, FormulaError, SameLocusError
from landscape.models import Formula, Genotype, Incompatibility, Literal


def negate(x: Literal) -> Literal:
    """Complement of an allele: same locus, other sign."""
    return x.negate()


def make_incompatibility(x: Literal, y: Literal) -> Incompatibility:
    """
    Build an incompatibility in canonical order.

    Args:
        x: First allele
        y: Second allele

    Returns:
        The incompatibility with the lower locus first
    """
    if x.locus == y.locus:
        error_message = "same-locus incompatibility unsupported: (%s, %s)" % (x, y)
        raise SameLocusError(error_message, x.locus)
    if x.locus < y.locus:
        return Incompatibility(x, y)
    return Incompatibility(y, x)


def _check_literal(n: int, literal: Literal) -> None:
    if literal.sign not in (0, 1):
        raise FormulaError("Invalid allele sign %r" % literal.sign, literal.locus)
    if not 0 <= literal.locus < n:
        error_message = "Locus %d out of range for %d loci" % (literal.locus + 1, n)
        raise FormulaError(error_message, literal.locus)


def formula_from_vertices(n: int, pairs: Iterable[Tuple[int, int]]) -> Formula:
    """
    Build a formula from pairs of digraph vertices (2*locus + sign).

    Pairs are canonicalized, deduplicated and sorted as integers; the clause
    objects are created once, sharing one Literal per vertex.

    Args:
        n: Number of loci (at least 1)
        pairs: Vertex pairs, in any order and possibly repeated

    Returns:
        Formula with sorted, duplicate-free clauses
    """
    if n < 1:
        raise FormulaError("A formula needs at least one locus, got n=%d" % n)

    vertex_count = 2 * n
    canonical = set()
    for first, second in pairs:
        for vertex in (first, second):
            if not 0 <= vertex < vertex_count:
                error_message = "Locus %d out of range for %d loci" % ((vertex >> 1) + 1, n)
                raise FormulaError(error_message, vertex >> 1)
        first_locus, second_locus = first >> 1, second >> 1
        if first_locus == second_locus:
            x, y = Literal.from_vertex(first), Literal.from_vertex(second)
            raise SameLocusError("same-locus incompatibility unsupported: (%s, %s)" % (x, y), first_locus)
        canonical.add((first, second) if first_locus < second_locus else (second, first))

    literal_of: Dict[int, Literal] = {}
    clauses = []
    for first, second in sorted(canonical):
        x = literal_of.get(first)
        if x is None:
            x = literal_of[first] = Literal.from_vertex(first)
        y = literal_of.get(second)
        if y is None:
            y = literal_of[second] = Literal.from_vertex(second)
        clauses.append(Incompatibility(x, y))
    return Formula(n, tuple(clauses))


def build_formula(n: int, pairs: Iterable[Tuple[Literal, Literal]]) -> Formula:
    """
    Canonicalize and deduplicate a list of incompatible allele pairs.

    Args:
        n: Number of loci (at least 1)
        pairs: Allele pairs, in any order and possibly repeated

    Returns:
        Formula with sorted, duplicate-free clauses
    """
    if n < 1:
        raise FormulaError("A formula needs at least one locus, got n=%d" % n)

    vertex_pairs = []
    for x, y in pairs:
        _check_literal(n, x)
        _check_literal(n, y)
        vertex_pairs.append((x.vertex, y.vertex))
    return formula_from_vertices(n, vertex_pairs)


def violated_incompatibility(g: Genotype, formula: Formula) -> Optional[Incompatibility]:
    """First incompatibility, in canonical order, whose two alleles both occur in g."""
    if g.n != formula.n:
        error_message = "Genotype has %d loci but the formula has %d" % (g.n, formula.n)
        raise DimensionError(error_message, formula.n, g.n)

    for clause in formula.clauses:
        if g.has(clause.first) and g.has(clause.second):
            return clause
    return None


def is_viable(g: Genotype, formula: Formula) -> bool:
    """True iff no incompatibility of the formula has both alleles in g."""
    return violated_incompatibility(g, formula) is None
