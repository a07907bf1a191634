"""Test suite for the DIMACS and native formula formats."""

import os
import tempfile

import numpy as np
import pytest

from landscape.core.ensemble import sample_formula
from landscape.core.parser import (
    FORMAT_DIMACS,
    FORMAT_NATIVE,
    FormulaParser,
    load_formula,
    parse_dimacs,
    parse_native,
    render_dimacs,
    render_native,
)
from landscape.exceptions import ParseError
from tests.formulas import F1, F2, F3


def test_parse_dimacs_single_clause():
    """Test that the clause (1 or 2) is the incompatibility (0_1, 0_2)."""
    formula = parse_dimacs("p cnf 2 1\n1 2 0\n")

    assert formula.n == 2
    assert [str(clause) for clause in formula] == ["0_1 0_2"]


def test_render_dimacs_example():
    """Test the DIMACS rendering of F1."""
    assert render_dimacs(F1) == "p cnf 4 2\n1 -2 0\n2 -3 0\n"
    assert parse_dimacs("p cnf 4 2\n1 -2 0\n2 -3 0") == F1


def test_parse_dimacs_comments_and_layout():
    """Test comment lines, clauses split over lines and duplicate clauses."""
    text = "c example\nc another comment\np cnf 3 3\n1 -2\n 0 -3 2 0\n-2 1 0\n%\n0\n"

    formula = parse_dimacs(text)

    assert formula.n == 3
    assert len(formula) == 2
    assert [str(clause) for clause in formula] == ["0_1 1_2", "0_2 1_3"]


def test_parse_dimacs_errors():
    """Test parse errors and their line numbers."""
    cases = [
        ("p cnf 2 1\n1 -1 0\n", 2),
        ("p cnf 3 1\n1 2 3 0\n", 2),
        ("p cnf 2 1\n1 0\n", 2),
        ("p cnf 2 1\n1 3 0\n", 2),
        ("1 2 0\n", 1),
        ("p cnf two 1\n1 2 0\n", 1),
        ("p dnf 2 1\n1 2 0\n", 1),
        ("p cnf 2 1\n1 2\n", 2),
        ("c only comments\n", 1),
        ("p cnf 2 1\n1 -0 0\n", 2),
    ]
    for text, line_number in cases:
        with pytest.raises(ParseError) as info:
            parse_dimacs(text)
        assert info.value.line_number == line_number


def test_parse_dimacs_clause_count_mismatch_warns(caplog):
    """Test that a wrong declared clause count is only a warning."""
    with caplog.at_level("WARNING"):
        formula = parse_dimacs("p cnf 2 5\n1 2 0\n")

    assert len(formula) == 1
    assert "declares 5 clauses" in caplog.text


def test_native_round_trip_examples():
    """Test the native format on the three examples."""
    assert render_native(F2) == "loci 4\n0_1 1_2\n1_1 0_2\n0_2 1_3\n"
    for formula in [F1, F2, F3]:
        assert parse_native(render_native(formula)) == formula
        assert parse_dimacs(render_dimacs(formula)) == formula


def test_parse_native_comments():
    """Test comments, blank lines and duplicates in the native format."""
    text = "# two complementary 2-cycles\nloci 4\n\n0_2 1_3  # first\n0_1 1_2\n1_1 0_2\n1_3 0_2\n"

    assert parse_native(text) == F2


def test_parse_native_errors():
    """Test native parse errors and their line numbers."""
    cases = [
        ("0_1 1_2\n", 1),
        ("loci x\n", 1),
        ("loci 2\n0_1\n", 2),
        ("loci 2\n0_1 1_1\n", 2),
        ("loci 2\n0_1 1_3\n", 2),
        ("loci 2\n0_1 2_2\n", 2),
        ("# nothing\n", 1),
    ]
    for text, line_number in cases:
        with pytest.raises(ParseError) as info:
            parse_native(text)
        assert info.value.line_number == line_number


def test_round_trip_random_formulas():
    """Test both formats on random formulas."""
    rng = np.random.default_rng(17)
    for _ in range(50):
        n = int(rng.integers(2, 30))
        formula = sample_formula(n, float(rng.uniform(0.0, 2.0)), rng)
        assert parse_native(render_native(formula)) == formula
        assert parse_dimacs(render_dimacs(formula)) == formula


def test_load_formula_detects_format():
    """Test format detection by extension and by content."""
    with tempfile.TemporaryDirectory() as temp_dir:
        cnf_path = os.path.join(temp_dir, "f1.cnf")
        with open(cnf_path, "w", encoding="utf-8") as file:
            file.write(render_dimacs(F1))

        sniffed_path = os.path.join(temp_dir, "f1.txt")
        with open(sniffed_path, "w", encoding="utf-8") as file:
            file.write("c from a solver\n" + render_dimacs(F1))

        native_path = os.path.join(temp_dir, "f2.txt")
        with open(native_path, "w", encoding="utf-8") as file:
            file.write(render_native(F2))

        assert load_formula(cnf_path) == F1
        assert load_formula(sniffed_path) == F1
        assert load_formula(native_path) == F2
        assert load_formula(native_path, FORMAT_NATIVE) == F2
        assert FormulaParser.detect_format(native_path, render_native(F2)) == FORMAT_NATIVE
        assert FormulaParser.detect_format(cnf_path, "") == FORMAT_DIMACS

        with pytest.raises(ParseError):
            load_formula(native_path, FORMAT_DIMACS)
        with pytest.raises(ValueError):
            load_formula(native_path, "xml")


def test_load_formula_crlf():
    """Test Windows line endings."""
    with tempfile.NamedTemporaryFile(mode="wb", suffix=".txt", delete=False) as file:
        file.write(b"loci 4\r\n0_2 1_3\r\n0_1 1_2\r\n")
        path = file.name

    try:
        assert load_formula(path) == F1
    finally:
        os.remove(path)


if __name__ == "__main__":
    test_parse_dimacs_single_clause()
    test_render_dimacs_example()
    test_parse_dimacs_comments_and_layout()
    test_parse_dimacs_errors()
    test_native_round_trip_examples()
    test_parse_native_comments()
    test_parse_native_errors()
    test_round_trip_random_formulas()
    test_load_formula_detects_format()
    test_load_formula_crlf()
    print("All tests passed!")
