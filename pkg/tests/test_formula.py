"""Test suite for formulas, the implication digraph and its strong components."""

import numpy as np
import pytest

from landscape.core.components import comparable, is_satisfiable, satisfying_assignment, scc
from landscape.core.digraph import BACKWARD, FORWARD, build_digraph, reach_set
from landscape.core.ensemble import sample_formula
from landscape.core.formula import (
    build_formula,
    formula_from_vertices,
    is_viable,
    make_incompatibility,
    negate,
    violated_incompatibility,
)
from landscape.exceptions import DimensionError, FormulaError, SameLocusError, UnsatisfiableFormulaError
from landscape.models import Genotype, Literal
from tests.formulas import F1, F2, F3, TRIANGLE, UNSAT, allele


def _edges(formula):
    digraph = build_digraph(formula)
    edges = set()
    for source, targets in enumerate(digraph.successors):
        for target in targets:
            edges.add((str(Literal.from_vertex(source)), str(Literal.from_vertex(target))))
    return edges


def _component_sets(decomposition):
    return {frozenset(str(Literal.from_vertex(vertex)) for vertex in members) for members in decomposition.components}


def test_negate_and_canonical_order():
    """Test complements and canonical incompatibility order."""
    assert negate(allele("0_3")) == allele("1_3")

    clause = make_incompatibility(allele("1_3"), allele("0_2"))
    assert str(clause) == "0_2 1_3"
    assert clause == make_incompatibility(allele("0_2"), allele("1_3"))


def test_same_locus_rejected():
    """Test that both alleles on one locus are refused."""
    with pytest.raises(SameLocusError) as info:
        make_incompatibility(allele("0_1"), allele("1_1"))
    assert "same-locus incompatibility unsupported" in str(info.value)

    with pytest.raises(SameLocusError):
        build_formula(2, [(allele("1_2"), allele("1_2"))])


def test_build_formula_sorts_and_deduplicates():
    """Test canonicalization of the clause list."""
    formula = build_formula(
        4,
        [
            (allele("1_3"), allele("0_2")),
            (allele("0_1"), allele("1_2")),
            (allele("0_2"), allele("1_3")),
        ],
    )

    assert formula.n == 4
    assert len(formula) == 2
    assert [str(clause) for clause in formula] == ["0_1 1_2", "0_2 1_3"]
    assert formula == F1


def test_build_formula_range_checks():
    """Test loci outside the formula and empty locus sets."""
    with pytest.raises(FormulaError):
        build_formula(2, [(allele("0_1"), allele("1_3"))])
    with pytest.raises(FormulaError):
        build_formula(0, [])


def test_build_formula_is_idempotent():
    """Test that rebuilding a formula from its own clauses, in any order or orientation, changes nothing."""
    rng = np.random.default_rng(23)
    for n, c in [(6, 1.0), (12, 2.0), (40, 0.8)]:
        formula = sample_formula(n, c, rng)
        pairs = [(clause.first, clause.second) for clause in formula]

        assert build_formula(n, pairs) == formula
        assert build_formula(n, [(y, x) for x, y in reversed(pairs)]) == formula
        assert build_formula(n, pairs + pairs) == formula


def test_build_formula_order_matches_clause_order():
    """Test that clauses come out in the dataclass order of Incompatibility."""
    formula = sample_formula(30, 2.0, np.random.default_rng(4))

    assert list(formula.clauses) == sorted(formula.clauses)
    assert len(set(formula.clauses)) == len(formula)


def test_formula_from_vertices():
    """Test building from digraph vertices and its range and locus checks."""
    # 0_1 = 0, 1_2 = 3, 0_2 = 2, 1_3 = 5
    assert formula_from_vertices(4, [(5, 2), (0, 3), (2, 5)]) == F1
    assert formula_from_vertices(3, []) == build_formula(3, [])

    with pytest.raises(SameLocusError):
        formula_from_vertices(2, [(2, 3)])
    with pytest.raises(FormulaError):
        formula_from_vertices(2, [(0, 4)])
    with pytest.raises(FormulaError):
        formula_from_vertices(2, [(-1, 2)])
    with pytest.raises(FormulaError):
        formula_from_vertices(0, [])


def test_viability():
    """Test the viability predicate on F1."""
    assert str(violated_incompatibility(Genotype.parse("0111"), F1)) == "0_1 1_2"
    assert not is_viable(Genotype.parse("0111"), F1)
    assert is_viable(Genotype.parse("1100"), F1)
    assert violated_incompatibility(Genotype.parse("1100"), F1) is None

    with pytest.raises(DimensionError):
        is_viable(Genotype.parse("110"), F1)


def test_viability_matches_clause_evaluation():
    """Test is_viable against reading every clause off the genotype string."""
    rng = np.random.default_rng(31)
    for c in [0.5, 1.5, 3.0]:
        formula = sample_formula(6, c, rng)
        for code in range(1 << 6):
            genotype = Genotype(6, code)
            text = str(genotype)
            violated = any(
                all(text[literal.locus] == str(literal.sign) for literal in clause.literals()) for clause in formula
            )
            assert is_viable(genotype, formula) == (not violated)


def test_digraph_edges():
    """Test the two implications contributed by each incompatibility."""
    f1_edges = {("0_2", "0_3"), ("1_3", "1_2"), ("0_1", "0_2"), ("1_2", "1_1")}
    assert _edges(F1) == f1_edges
    assert _edges(F2) == f1_edges | {("1_1", "1_2"), ("0_2", "0_1")}

    digraph = build_digraph(F1)
    assert digraph.vertex_count == 8
    assert digraph.edge_count == 4
    assert build_digraph(build_formula(3, [])).edge_count == 0


def test_reach_sets():
    """Test forward and backward reach sets on F1."""
    digraph = build_digraph(F1)

    forward = {str(literal) for literal in reach_set(digraph, allele("0_1"), FORWARD)}
    backward = {str(literal) for literal in reach_set(digraph, allele("1_1"), BACKWARD)}

    assert forward == {"0_1", "0_2", "0_3"}
    assert backward == {"1_1", "1_2", "1_3"}
    assert {str(literal) for literal in reach_set(digraph, allele("1_4"))} == {"1_4"}

    with pytest.raises(ValueError):
        reach_set(digraph, allele("0_1"), "sideways")


def test_reach_sets_mirror():
    """Test that y is reachable from x exactly when not x is reachable from not y."""
    rng = np.random.default_rng(17)
    for n, c in [(6, 1.0), (8, 1.5), (8, 3.0)]:
        digraph = build_digraph(sample_formula(n, c, rng))
        alleles = [Literal.from_vertex(vertex) for vertex in range(digraph.vertex_count)]
        reach = {x: reach_set(digraph, x) for x in alleles}
        for x in alleles:
            for y in alleles:
                assert (y in reach[x]) == (x.negate() in reach[y.negate()])


def test_scc_components():
    """Test strong components of the three example formulas."""
    f1 = scc(build_digraph(F1))
    assert f1.component_count == 8
    assert all(len(members) == 1 for members in f1.components)

    f2 = scc(build_digraph(F2))
    f2_sets = _component_sets(f2)
    assert frozenset({"0_1", "0_2"}) in f2_sets
    assert frozenset({"1_1", "1_2"}) in f2_sets
    assert sum(1 for members in f2.components if len(members) == 1) == 4

    triangle = scc(build_digraph(TRIANGLE))
    assert frozenset({"0_1", "0_2", "0_3"}) in _component_sets(triangle)


def test_scc_topological_order():
    """Test that condensation edges run from lower to higher component index."""
    for formula in [F1, F2, F3, TRIANGLE, UNSAT]:
        decomposition = scc(build_digraph(formula))
        for component, targets in enumerate(decomposition.condensation):
            assert all(target > component for target in targets)
        for component, members in enumerate(decomposition.components):
            complement = decomposition.complement_of[component]
            assert decomposition.component_of[members[0] ^ 1] == complement


def test_satisfiability():
    """Test the strong-component satisfiability criterion."""
    assert is_satisfiable(scc(build_digraph(F1)))
    assert is_satisfiable(scc(build_digraph(F2)))
    assert is_satisfiable(scc(build_digraph(F3)))
    assert not is_satisfiable(scc(build_digraph(UNSAT)))


def test_comparable():
    """Test the order between the complementary cycles of F2 and F3."""
    f2 = scc(build_digraph(F2))
    zeros = f2.component_of[allele("0_1").vertex]
    ones = f2.component_of[allele("1_1").vertex]
    assert not comparable(f2, zeros, ones)

    f3 = scc(build_digraph(F3))
    zeros = f3.component_of[allele("0_1").vertex]
    ones = f3.component_of[allele("1_1").vertex]
    assert comparable(f3, zeros, ones)
    assert comparable(f3, ones, zeros)
    assert comparable(f3, zeros, zeros)

    with pytest.raises(ValueError):
        comparable(f3, 0, f3.component_count)


def test_comparable_through_trivial_components():
    """Test reachability that passes through singleton components."""
    # 0_1 -> 0_2 -> 0_3 with no cycles at all
    decomposition = scc(build_digraph(F1))
    first = decomposition.component_of[allele("0_1").vertex]
    last = decomposition.component_of[allele("0_3").vertex]
    other = decomposition.component_of[allele("1_4").vertex]

    assert comparable(decomposition, first, last)
    assert not comparable(decomposition, first, other)


def test_satisfying_assignment():
    """Test that the assignment read off the component order is viable."""
    for formula in [F1, F2, F3, TRIANGLE]:
        genotype = satisfying_assignment(scc(build_digraph(formula)))
        assert genotype.n == formula.n
        assert is_viable(genotype, formula)

    with pytest.raises(UnsatisfiableFormulaError):
        satisfying_assignment(scc(build_digraph(UNSAT)))


if __name__ == "__main__":
    test_negate_and_canonical_order()
    test_same_locus_rejected()
    test_build_formula_sorts_and_deduplicates()
    test_build_formula_range_checks()
    test_build_formula_is_idempotent()
    test_build_formula_order_matches_clause_order()
    test_formula_from_vertices()
    test_viability()
    test_viability_matches_clause_evaluation()
    test_digraph_edges()
    test_reach_sets()
    test_reach_sets_mirror()
    test_scc_components()
    test_scc_topological_order()
    test_satisfiability()
    test_comparable()
    test_comparable_through_trivial_components()
    test_satisfying_assignment()
    print("All tests passed!")
