#!/usr/bin/env python3
"""
Main entry point for the landscape command-line interface.
Analyze incompatibility formulas, run simulation campaigns and oracle sweeps.
"""

import argparse
import logging
import sys
from typing import List, Optional

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from landscape import __version__
from landscape.config import config
from landscape.constants import DEFAULT_VERIFY_PAIRS, ENV_LOG_LEVEL, EXIT_PARSE_ERROR, EXIT_USAGE
from landscape.core.operations import OUTPUT_BOTH, OUTPUT_CSV, OUTPUT_JSON, OUTPUT_TABLE, Operations
from landscape.core.parser import FORMAT_AUTO, FORMATS
from landscape.exceptions import ConfigurationError, LandscapeError, ParseError
from landscape.models import EnsembleConfig
from landscape.utils import parse_float_list


class LandscapeArgumentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def configure_logging(level_name: str, console: Console) -> None:
    """Send log records to stderr through rich."""
    level = logging.getLevelName(level_name.upper())
    if not isinstance(level, int):
        raise ConfigurationError("Unknown log level '%s'" % level_name, ENV_LOG_LEVEL)
    handler = RichHandler(console=console, show_path=False, rich_tracebacks=False)
    logging.basicConfig(level=level, format="%(message)s", datefmt="[%X]", handlers=[handler], force=True)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    parser = LandscapeArgumentParser(
        prog="landscape",
        description="Cluster structure of viable genotypes under pairwise incompatibilities",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
        Examples:
        landscape analyze formula.cnf                  # JSON cluster report
        landscape analyze formula.txt --format table   # rich table
        landscape simulate --n 200 --c 0.5 --trials 20000 --seed 42 --out runs/n200
        landscape verify --n-max 10 --cases 1000 --c-list 0.3,0.5,0.8,1.2 --seed 1
        landscape path formula.txt 1100 0000
        landscape theory --n 200 --c 0.5
        landscape env
        """,
    )
    parser.add_argument("--version", action="version", version="landscape v%s" % __version__)
    parser.add_argument("--log-level", default=None, help="Log level (default: LANDSCAPE_LOG_LEVEL or WARNING)")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=LandscapeArgumentParser)

    analyze_parser = subparsers.add_parser("analyze", help="Report splitting pairs and the cluster count")
    analyze_parser.add_argument("file", help="Formula file (DIMACS or native)")
    analyze_parser.add_argument("--format", choices=[OUTPUT_JSON, OUTPUT_TABLE], default=OUTPUT_JSON)
    analyze_parser.add_argument("--input-format", choices=list(FORMATS), default=FORMAT_AUTO)

    simulate_parser = subparsers.add_parser("simulate", help="Run a Monte Carlo campaign")
    simulate_parser.add_argument("--n", type=int, required=True, help="Number of loci")
    simulate_parser.add_argument("--c", type=float, required=True, help="Ensemble constant, p = c/(2n)")
    simulate_parser.add_argument("--trials", type=int, required=True)
    simulate_parser.add_argument("--seed", type=int, required=True)
    simulate_parser.add_argument("--max-cycle-len", type=int, default=None, help="Cycle census length m")
    simulate_parser.add_argument("--out", default=None, help="Output prefix for PREFIX.csv / PREFIX.json")
    simulate_parser.add_argument("--format", choices=[OUTPUT_CSV, OUTPUT_JSON, OUTPUT_BOTH], default=OUTPUT_BOTH)
    simulate_parser.add_argument("--svg", default=None, help="Write an SVG histogram of Y")
    simulate_parser.add_argument("--threads", type=int, default=None, help="Worker cap (default: LANDSCAPE_THREADS)")
    simulate_parser.add_argument("--quiet", action="store_true")

    verify_parser = subparsers.add_parser("verify", help="Compare the analysis with brute-force enumeration")
    verify_parser.add_argument("--n-max", type=int, required=True)
    verify_parser.add_argument("--cases", type=int, required=True)
    verify_parser.add_argument("--c-list", required=True, help="Comma-separated values of c")
    verify_parser.add_argument("--seed", type=int, required=True)
    verify_parser.add_argument("--pairs", type=int, default=DEFAULT_VERIFY_PAIRS, help="Genotype pairs per case")
    verify_parser.add_argument("--quiet", action="store_true")

    path_parser = subparsers.add_parser("path", help="Mutational path between two viable genotypes")
    path_parser.add_argument("file", help="Formula file (DIMACS or native)")
    path_parser.add_argument("u", help="Start genotype, e.g. 1100")
    path_parser.add_argument("v", help="End genotype, e.g. 0000")
    path_parser.add_argument("--input-format", choices=list(FORMATS), default=FORMAT_AUTO)

    theory_parser = subparsers.add_parser("theory", help="Closed-form values for given n and c")
    theory_parser.add_argument("--n", type=int, required=True)
    theory_parser.add_argument("--c", type=float, required=True)
    theory_parser.add_argument("--max-cycle-len", type=int, default=None)
    theory_parser.add_argument("--format", choices=[OUTPUT_JSON, OUTPUT_TABLE], default=OUTPUT_JSON)

    subparsers.add_parser("env", help="Show configuration variables")
    return parser


def dispatch(args: argparse.Namespace, operations: Operations) -> int:
    """Run the selected subcommand and return its exit code."""
    if args.command == "analyze":
        return operations.analyze(args.file, args.format, args.input_format)

    if args.command == "simulate":
        max_cycle_len = args.max_cycle_len if args.max_cycle_len is not None else config.get_max_cycle_len()
        cfg = EnsembleConfig(n=args.n, c=args.c, trials=args.trials, seed=args.seed, max_cycle_len=max_cycle_len)
        return operations.simulate(cfg, args.out, args.format, args.svg, args.quiet, args.threads)

    if args.command == "verify":
        try:
            c_list = parse_float_list(args.c_list)
        except ValueError as e:
            raise LandscapeError("Invalid --c-list '%s'" % args.c_list, e) from e
        return operations.verify(args.n_max, args.cases, c_list, args.seed, args.pairs, args.quiet)

    if args.command == "path":
        return operations.path(args.file, args.u, args.v, args.input_format)

    if args.command == "theory":
        max_cycle_len = args.max_cycle_len if args.max_cycle_len is not None else config.get_max_cycle_len()
        return operations.theory(args.n, args.c, max_cycle_len, args.format)

    return operations.show_environment()


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    console = Console()
    error_console = Console(stderr=True)

    try:
        configure_logging(args.log_level or config.get_log_level(), error_console)
        operations = Operations(console, error_console)
        return dispatch(args, operations)

    except KeyboardInterrupt:
        error_console.print("Interrupted.")
        return EXIT_USAGE
    except ParseError as e:
        error_console.print("[red]Parse error:[/] %s" % escape(e.message), highlight=False)
        return EXIT_PARSE_ERROR
    except LandscapeError as e:
        error_console.print("[red]Error:[/] %s" % escape(e.message), highlight=False)
        return EXIT_USAGE
    except (OSError, ValueError) as e:
        error_console.print("[red]Error:[/] %s" % escape(str(e)), highlight=False)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
