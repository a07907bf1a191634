"""DIMACS and native formula file parser and writer utilities."""

import logging
from typing import List, Optional, Tuple

from landscape.constants import EXT_DIMACS, NATIVE_COMMENT, NATIVE_HEADER
from landscape.core.formula import build_formula, formula_from_vertices
from landscape.exceptions import FormulaError, ParseError
from landscape.models import Formula, Literal
from landscape.utils import get_file_extension, read_text_file

logger = logging.getLogger(__name__)

FORMAT_AUTO = "auto"
FORMAT_DIMACS = "dimacs"
FORMAT_NATIVE = "native"
FORMATS = (FORMAT_AUTO, FORMAT_DIMACS, FORMAT_NATIVE)


class FormulaParser:
    """Reads and writes incompatibility formulas as DIMACS CNF or the native list format."""

    @staticmethod
    def _dimacs_vertex(token: str, n: int, line_number: int) -> int:
        try:
            value = int(token)
        except ValueError as e:
            raise ParseError("Line %d: invalid literal '%s'" % (line_number, token), line_number) from e
        variable = abs(value)
        if variable == 0 or variable > n:
            error_message = "Line %d: variable %d out of range for %d variables" % (line_number, variable, n)
            raise ParseError(error_message, line_number)
        # The clause literal l excludes the allele not-l.
        return 2 * (variable - 1) + (0 if value > 0 else 1)

    @staticmethod
    def parse_dimacs(text: str) -> Formula:
        """
        Parse DIMACS CNF text with two literals per clause.

        The clause (l1 or l2) is read as the incompatibility (not l1, not l2).
        Clauses may span lines; each ends with 0.

        Args:
            text: DIMACS content

        Returns:
            The formula, duplicates collapsed
        """
        n: Optional[int] = None
        declared_clauses = 0
        pairs: List[Tuple[int, int]] = []
        pending: List[int] = []
        pending_line = 0

        for line_number, raw_line in enumerate(text.split("\n"), 1):
            line = raw_line.strip()
            if not line or line.startswith("c"):
                continue
            if line.startswith("%"):
                break

            if line.startswith("p"):
                fields = line.split()
                if n is not None:
                    raise ParseError("Line %d: duplicate problem line" % line_number, line_number)
                if len(fields) != 4 or fields[1] != "cnf" or not fields[2].isdigit() or not fields[3].isdigit():
                    error_message = "Line %d: malformed header '%s', expected 'p cnf <n> <m>'" % (line_number, line)
                    raise ParseError(error_message, line_number)
                n = int(fields[2])
                declared_clauses = int(fields[3])
                if n < 1:
                    raise ParseError("Line %d: a formula needs at least one variable" % line_number, line_number)
                continue

            if n is None:
                raise ParseError("Line %d: clause before the 'p cnf' header" % line_number, line_number)

            for token in line.split():
                if token == "0":
                    if len(pending) != 2:
                        error_message = "Line %d: clause has %d literals, expected 2" % (pending_line, len(pending))
                        raise ParseError(error_message, pending_line)
                    first, second = pending
                    if first >> 1 == second >> 1:
                        error_message = "Line %d: same-locus incompatibility unsupported: (%s, %s)" % (
                            pending_line,
                            Literal.from_vertex(first),
                            Literal.from_vertex(second),
                        )
                        raise ParseError(error_message, pending_line)
                    pairs.append((first, second))
                    pending = []
                    continue
                if not pending:
                    pending_line = line_number
                pending.append(FormulaParser._dimacs_vertex(token, n, line_number))

        if n is None:
            raise ParseError("Missing 'p cnf <n> <m>' header", 1)
        if pending:
            raise ParseError("Line %d: clause not terminated by 0" % pending_line, pending_line)
        if declared_clauses != len(pairs):
            logger.warning("Header declares %d clauses but %d were read", declared_clauses, len(pairs))

        return formula_from_vertices(n, pairs)

    @staticmethod
    def render_dimacs(formula: Formula) -> str:
        """DIMACS CNF text: the incompatibility (x, y) becomes the clause (not x or not y)."""
        lines = ["p cnf %d %d" % (formula.n, len(formula))]
        for clause in formula.clauses:
            values = []
            for literal in clause.literals():
                variable = literal.locus + 1
                # not x is positive exactly when x carries allele 0
                values.append(variable if literal.sign == 0 else -variable)
            lines.append("%d %d 0" % (values[0], values[1]))
        return "\n".join(lines) + "\n"

    @staticmethod
    def parse_native(text: str) -> Formula:
        """
        Parse the native list format.

        The first content line is "loci <n>"; each further line holds two
        alleles such as "0_2 1_3". Text after '#' and blank lines are ignored.

        Args:
            text: Native format content

        Returns:
            The formula, duplicates collapsed
        """
        n: Optional[int] = None
        pairs: List[Tuple[Literal, Literal]] = []

        for line_number, raw_line in enumerate(text.split("\n"), 1):
            line = raw_line.split(NATIVE_COMMENT, 1)[0].strip()
            if not line:
                continue
            fields = line.split()

            if n is None:
                if len(fields) != 2 or fields[0] != NATIVE_HEADER or not fields[1].isdigit():
                    error_message = "Line %d: expected '%s <n>' header, got '%s'" % (line_number, NATIVE_HEADER, line)
                    raise ParseError(error_message, line_number)
                n = int(fields[1])
                if n < 1:
                    raise ParseError("Line %d: a formula needs at least one locus" % line_number, line_number)
                continue

            if len(fields) != 2:
                error_message = "Line %d: expected two alleles, got %d tokens" % (line_number, len(fields))
                raise ParseError(error_message, line_number)
            try:
                first = Literal.parse(fields[0])
                second = Literal.parse(fields[1])
                build_formula(n, [(first, second)])
            except (ValueError, FormulaError) as e:
                raise ParseError("Line %d: %s" % (line_number, e), line_number) from e
            pairs.append((first, second))

        if n is None:
            raise ParseError("Missing '%s <n>' header" % NATIVE_HEADER, 1)
        return build_formula(n, pairs)

    @staticmethod
    def render_native(formula: Formula) -> str:
        """Native list format, one incompatibility per line in canonical order."""
        lines = ["%s %d" % (NATIVE_HEADER, formula.n)]
        for clause in formula.clauses:
            lines.append(str(clause))
        return "\n".join(lines) + "\n"

    @staticmethod
    def detect_format(file_path: str, text: str) -> str:
        """DIMACS for .cnf/.dimacs files or content opening with 'c'/'p cnf' lines, native otherwise."""
        if get_file_extension(file_path) in EXT_DIMACS:
            return FORMAT_DIMACS
        for raw_line in text.split("\n"):
            line = raw_line.strip()
            if not line:
                continue
            if line.startswith("p cnf") or line == "c" or line.startswith("c "):
                return FORMAT_DIMACS
            return FORMAT_NATIVE
        return FORMAT_NATIVE

    @staticmethod
    def parse_formula_file(file_path: str, fmt: str = FORMAT_AUTO) -> Formula:
        """
        Load a formula from disk.

        Args:
            file_path: Path of the formula file
            fmt: "auto", "dimacs" or "native"

        Returns:
            The parsed formula
        """
        if fmt not in FORMATS:
            raise ValueError("Unknown formula format '%s'" % fmt)

        content = read_text_file(file_path)
        if content is None:
            raise ParseError("Cannot decode '%s'" % file_path, 0)

        resolved = FormulaParser.detect_format(file_path, content) if fmt == FORMAT_AUTO else fmt
        logger.debug("reading %s as %s", file_path, resolved)
        if resolved == FORMAT_DIMACS:
            return FormulaParser.parse_dimacs(content)
        return FormulaParser.parse_native(content)


parse_dimacs = FormulaParser.parse_dimacs
render_dimacs = FormulaParser.render_dimacs
parse_native = FormulaParser.parse_native
render_native = FormulaParser.render_native
load_formula = FormulaParser.parse_formula_file
