"""Test suite for the command-line interface."""

import json
import os
import tempfile
from unittest.mock import patch

import pytest

from landscape.core.formula import build_formula
from landscape.core.parser import render_dimacs, render_native
from landscape.main import main
from tests.formulas import F1, F2, ORDERED_PAIRS, UNSAT


def write_formula(directory, name, text):
    file_path = os.path.join(directory, name)
    with open(file_path, "w", encoding="utf-8") as file:
        file.write(text)
    return file_path


def test_analyze_json(capsys):
    """Test the JSON report for two complementary 2-cycles."""
    with tempfile.TemporaryDirectory() as temp_dir:
        file_path = write_formula(temp_dir, "f2.txt", render_native(F2))
        exit_code = main(["analyze", file_path])

    payload = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert payload["satisfiable"] is True
    assert payload["k"] == 1
    assert payload["clusters"] == "2"
    assert payload["m"] == 3
    assert payload["splitting_pairs"][0]["loci"] == [1, 2]


def test_analyze_ordered_pairs(capsys):
    """Test that two ordered splitting pairs report three clusters, not four."""
    with tempfile.TemporaryDirectory() as temp_dir:
        file_path = write_formula(temp_dir, "ordered.cnf", render_dimacs(ORDERED_PAIRS))
        exit_code = main(["analyze", file_path])

    payload = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert payload["k"] == 2
    assert payload["clusters"] == "3"
    assert [pair["loci"] for pair in payload["splitting_pairs"]] == [[1, 7], [2, 8]]


def test_analyze_edge_cases(capsys):
    """Test the empty formula and an unsatisfiable one."""
    with tempfile.TemporaryDirectory() as temp_dir:
        empty_path = write_formula(temp_dir, "empty.cnf", render_dimacs(build_formula(3, [])))
        unsat_path = write_formula(temp_dir, "unsat.cnf", render_dimacs(UNSAT))

        assert main(["analyze", empty_path]) == 0
        empty_payload = json.loads(capsys.readouterr().out)
        assert main(["analyze", unsat_path]) == 0
        unsat_payload = json.loads(capsys.readouterr().out)

    assert empty_payload["clusters"] == "1"
    assert empty_payload["k"] == 0
    assert unsat_payload["clusters"] == "0"
    assert unsat_payload["satisfiable"] is False
    assert unsat_payload["witness"] is None


def test_analyze_table(capsys):
    """Test that the table output mentions the cluster count."""
    with tempfile.TemporaryDirectory() as temp_dir:
        file_path = write_formula(temp_dir, "f2.txt", render_native(F2))
        assert main(["analyze", file_path, "--format", "table"]) == 0

    assert "f2.txt" in capsys.readouterr().out


def test_analyze_parse_error(capsys):
    """Test that malformed input exits with status 2."""
    with tempfile.TemporaryDirectory() as temp_dir:
        file_path = write_formula(temp_dir, "bad.cnf", "p cnf 2 1\n1 -1 0\n")
        exit_code = main(["analyze", file_path])

    assert exit_code == 2
    assert "Line 2" in capsys.readouterr().err


def test_analyze_missing_file():
    """Test that a missing file is a usage error."""
    assert main(["analyze", "/nonexistent/formula.cnf"]) == 1


def test_path_output(capsys):
    """Test the path listing and the disconnected case."""
    with tempfile.TemporaryDirectory() as temp_dir:
        f1_path = write_formula(temp_dir, "f1.txt", render_native(F1))
        f2_path = write_formula(temp_dir, "f2.txt", render_native(F2))

        assert main(["path", f1_path, "1100", "0000"]) == 0
        assert capsys.readouterr().out == "1100\n1000\n0000\n"

        assert main(["path", f2_path, "1100", "0000"]) == 0
        assert capsys.readouterr().out == "not connected\n"

        assert main(["path", f2_path, "1100", "1100"]) == 0
        assert capsys.readouterr().out == "1100\n"


def test_path_invalid_endpoints():
    """Test inviable endpoints and wrong lengths."""
    with tempfile.TemporaryDirectory() as temp_dir:
        f1_path = write_formula(temp_dir, "f1.txt", render_native(F1))

        assert main(["path", f1_path, "0100", "0000"]) == 1
        assert main(["path", f1_path, "110", "0000"]) == 1
        assert main(["path", f1_path, "11x0", "0000"]) == 1


def test_verify_passes(capsys):
    """Test a clean oracle sweep."""
    exit_code = main(["verify", "--n-max", "8", "--cases", "20", "--c-list", "0.5,1.0", "--seed", "3", "--quiet"])

    assert exit_code == 0
    assert capsys.readouterr().out == "20/20 ok\n"


def test_verify_reports_mismatch(capsys):
    """Test that a broken comparability check exits with status 3."""
    with patch("landscape.core.verification.sample_formula", return_value=F2), patch(
        "landscape.core.clusters.comparable", return_value=True
    ):
        exit_code = main(["verify", "--n-max", "4", "--cases", "2", "--c-list", "0.5", "--seed", "0", "--quiet"])

    output = capsys.readouterr().out
    assert exit_code == 3
    assert output.startswith("0/2 ok\n")
    assert output.count("# case") == 2
    assert "loci 4" in output


def test_verify_bad_arguments():
    """Test malformed c lists and out-of-range sweeps."""
    assert main(["verify", "--n-max", "8", "--cases", "5", "--c-list", "0.5,x", "--seed", "0"]) == 1
    assert main(["verify", "--n-max", "99", "--cases", "5", "--c-list", "0.5", "--seed", "0"]) == 1


def test_simulate_writes_files(capsys):
    """Test the CSV and JSON outputs of a campaign."""
    with tempfile.TemporaryDirectory() as temp_dir:
        prefix = os.path.join(temp_dir, "runs", "n30")
        svg_path = os.path.join(temp_dir, "y.svg")
        arguments = ["simulate", "--n", "30", "--c", "0.5", "--trials", "40", "--seed", "7"]
        exit_code = main(arguments + ["--max-cycle-len", "4", "--out", prefix, "--svg", svg_path, "--quiet"])

        with open(prefix + ".csv", encoding="utf-8") as file:
            csv_lines = file.read().splitlines()
        with open(prefix + ".json", encoding="utf-8") as file:
            summary = json.load(file)
        assert os.path.exists(svg_path)

    assert exit_code == 0
    assert capsys.readouterr().out == ""
    assert csv_lines[0] == "trial,satisfiable,m_clauses,Y,T,X2,X3,X4,comparable_pairs,log2_clusters"
    assert len(csv_lines) == 41
    assert summary["trials"] == 40
    assert summary["config"]["seed"] == 7


def test_simulate_svg_without_finite_mean():
    """Test that an overflowing finite-n mean leaves the Poisson markers out of the SVG."""
    with tempfile.TemporaryDirectory() as temp_dir:
        prefix = os.path.join(temp_dir, "dense")
        svg_path = os.path.join(temp_dir, "dense.svg")
        arguments = ["simulate", "--n", "2000", "--c", "4", "--trials", "2", "--seed", "1"]
        exit_code = main(arguments + ["--max-cycle-len", "2", "--out", prefix, "--svg", svg_path, "--quiet"])

        with open(svg_path, encoding="utf-8") as file:
            svg = file.read()
        with open(prefix + ".json", encoding="utf-8") as file:
            summary = json.load(file)

    assert exit_code == 0
    assert summary["theory"]["lambda_n"] is None
    assert "nan" not in svg
    assert svg.count("<circle") == 0


def test_simulate_to_stdout(capsys):
    """Test that without --out the summary is printed."""
    exit_code = main(["simulate", "--n", "20", "--c", "0.3", "--trials", "10", "--seed", "1", "--quiet"])

    payload = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert payload["trials"] == 10


def test_simulate_bad_parameters():
    """Test that invalid ensemble parameters exit with status 1."""
    assert main(["simulate", "--n", "1", "--c", "0.5", "--trials", "10", "--seed", "1", "--quiet"]) == 1
    assert main(["simulate", "--n", "20", "--c", "-1", "--trials", "10", "--seed", "1", "--quiet"]) == 1
    assert main(["simulate", "--n", "20", "--c", "0.5", "--trials", "0", "--seed", "1", "--quiet"]) == 1


def test_theory_json(capsys):
    """Test the closed-form values at c = 0.5."""
    assert main(["theory", "--n", "200", "--c", "0.5"]) == 0

    payload = json.loads(capsys.readouterr().out)
    assert payload["lambda_inf"] == pytest.approx(0.0966, abs=1e-3)
    assert payload["p"] == pytest.approx(0.00125)
    assert set(payload["mu"]) == {"2", "3", "4", "5", "6"}


def test_usage_errors():
    """Test that argparse errors exit with status 1."""
    for argv in [[], ["bogus"], ["simulate", "--n", "10"], ["analyze"], ["theory", "--n", "x", "--c", "1"]]:
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 1


def test_unknown_log_level():
    """Test that an unknown log level is a configuration error."""
    assert main(["--log-level", "chatty", "theory", "--n", "10", "--c", "0.5"]) == 1


if __name__ == "__main__":
    pytest.main([__file__])
